#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilden/free_aut.hpp"
#include "hilden/perm.hpp"

namespace hilden {

// Word in the half-twist generators on a fixed number of strands.
// Letters are signed indices: +i is sigma_i, -i its inverse, 1 <= i < m.
// Words are kept as written; no reduction beyond explicit syntactic_cancel.
class BraidWord {
public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);

  static BraidWord sigma(int strands, int index, int sign = +1);
  static BraidWord full_twist(int strands);       // (s1 s2 ... s_{m-1})^m
  static BraidWord spherical_relator(int strands);  // s1 ... s_{m-1} s_{m-1} ... s1

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  BraidWord inverse() const;
  BraidWord power(int exponent) const;
  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const BraidWord&) const = default;

private:
  int strands_ = 2;
  std::vector<Letter> letters_;
};

// Removes adjacent sigma_i sigma_i^-1 pairs only. Group element unchanged.
BraidWord syntactic_cancel(const BraidWord& b);

// Which end of a written braid word acts first when evaluated into the
// mapping class group. Products of mapping classes are always "right factor
// acts first"; this flag decides how written words line up with that.
// The verification harness confirms the adopted value with an
// order-sensitive identity and flips it (with a report) if the mirrored
// order is the one that validates.
enum class Convention { RightmostFirst, LeftmostFirst };

Convention active_convention();
void set_convention(Convention c);
std::string convention_name(Convention c);

// The permutation of the strand endpoints, sigma_i |-> (i i+1), folded
// under the active convention.
Perm perm_of(const BraidWord& b);

// Elementary half-twist action on the free group of rank m-1 (the marked
// sphere group with the last puncture loop eliminated):
//   sigma_i: x_i |-> x_i x_{i+1} x_i^-1, x_{i+1} |-> x_i        (i < m-1)
//   sigma_{m-1}: x_{m-1} |-> x_{m-1} (x_1...x_{m-1})^-1 x_{m-1}^-1
FreeAut artin_action(int strands, int index, int sign);

// Evaluation of a braid word into a mapping class, i.e. the composite of the
// elementary actions under the active convention. Satisfies
// puncture_perm(gamma(b)) == perm_of(b).
FreeAut gamma(const BraidWord& b);

// The named elements of the wicket calculus on 2n+2 strands.
struct NamedElement {
  enum class Tag {
    Sigma,      // sigma_i, 1 <= i <= 2n+1
    S,          // s_i = sigma_2i sigma_{2i+1} sigma_{2i-1} sigma_2i, 1 <= i <= n
    R,          // r_i = sigma_2i^-1 sigma_{2i+1}^-1 sigma_{2i-1} sigma_2i
    T,          // t_j = sigma_{2j-1}^2, 1 <= j <= n+1
    BigR,       // r = sigma_1 sigma_3 ... sigma_{2n+1}
    BigS,       // s = s_n ... s_2 s_1
    FullTwist,  // (sigma_1 ... sigma_{2n+1})^{2n+2}
  };

  Tag tag;
  int index = 0;  // used by Sigma, S, R, T

  static NamedElement sigma(int i) { return {Tag::Sigma, i}; }
  static NamedElement s(int i) { return {Tag::S, i}; }
  static NamedElement r(int i) { return {Tag::R, i}; }
  static NamedElement t(int j) { return {Tag::T, j}; }
  static NamedElement big_r() { return {Tag::BigR, 0}; }
  static NamedElement big_s() { return {Tag::BigS, 0}; }
  static NamedElement full_twist() { return {Tag::FullTwist, 0}; }

  bool operator==(const NamedElement&) const = default;

  // Token-grammar spelling: s3, SS1, RR2, T2, R, S, FULLTWIST.
  std::string str() const;
};

// Expansion into sigma-letters on 2n+2 strands.
// Throws std::invalid_argument when the index is out of range for n.
BraidWord named_word(const NamedElement& e, int n);

// A formal word in named elements; sign -1 means the inverse of the element.
using NamedWord = std::vector<std::pair<NamedElement, int>>;

BraidWord expand_named(const NamedWord& word, int n);
NamedWord inverse_named(const NamedWord& word);
std::string named_word_str(const NamedWord& word);

}  // namespace hilden
