#pragma once

#include <string>
#include <vector>

#include "hilden/braid.hpp"

namespace hilden {

enum class GroupId { Hilden, LiftableHilden, SphereMapping };

// k = 2 and k >= 3 are the only behaviorally distinct cases; k >= 3 all
// agree, so the mode carries no particular k.
enum class KMode { K2, KGe3 };

std::string group_name(GroupId g);
std::string kmode_name(KMode k);
KMode kmode_of(int k);

struct GenEntry {
  std::string label;
  NamedWord word;  // expandable to a braid word on 2n+2 strands
};

struct GenSet {
  GroupId group;
  int n = 1;
  KMode kmode = KMode::K2;
  std::vector<GenEntry> members;
};

// The published generating catalogs:
//   Hilden:          s_i, r_i (1<=i<=n), sigma_{2j-1} (1<=j<=n+1)
//   LiftableHilden:  s_i, r_i (1<=i<=n), t_j (1<=j<=n+1), r
//   SphereMapping:   sigma_i (1<=i<=2n+1)
GenSet standard_gens(GroupId group, int n);

// The 3-element generating set: {s sigma_1, s_1, r_1} for k = 2 and
// {s r, s_1, r_1} for k >= 3, with s = s_n ... s_2 s_1.
GenSet three_gens(int n, KMode kmode);

// The 3-letter rewrite alphabet. A stands for s*sigma_1 (k = 2) or s*r
// (k >= 3); S1 and R1 are s_1 and r_1.
enum class Letter3 { A, S1, R1 };

std::string letter3_name(Letter3 l);

// Run-length encoded word over the 3-letter alphabet: (letter, exponent)
// with nonzero exponents and no two adjacent equal letters.
using GenWord = std::vector<std::pair<Letter3, int>>;

GenWord genword_concat(GenWord a, const GenWord& b);
GenWord genword_inverse(const GenWord& w);
GenWord genword_power(const GenWord& w, int exponent);
std::size_t genword_length(const GenWord& w);  // sum of |exponent|
std::string genword_str(const GenWord& w);

// Rewrites a standard generator as a word over the 3-letter alphabet,
// following the constructive recipe:
//   s_i       = A^{-(i-1)} s_1 A^{i-1}
//   r_i       = s^{-(i-1)} r_1 s^{i-1}
//   sigma_1   = s^-1 A                       (k = 2)
//   sigma_{2j-1} = s^{-(j-1)} sigma_1 s^{j-1}  (k = 2)
//   r         = s^-1 A                       (k >= 3)
//   t_1       = s_1^-1 ... s_n^-1 r_n^-1 ... r_1^-1  (k >= 3)
//   t_j       = s^{-(j-1)} t_1 s^{j-1}       (k >= 3)
// with s = s_n ... s_1 recursively expanded over the alphabet.
// Throws std::invalid_argument when the target is not in the catalog for
// the given mode.
GenWord rewrite(const NamedElement& target, int n, KMode kmode);

// Expansion of the alphabet letters / a full rewrite word into sigma-letters.
BraidWord expand_letter3(Letter3 l, int n, KMode kmode);
BraidWord expand_genword(const GenWord& w, int n, KMode kmode);

}  // namespace hilden
