#pragma once

#include <string>
#include <vector>

#include "hilden/braid.hpp"
#include "hilden/gens.hpp"

namespace hilden {

// One machine-checkable identity between words in named elements. Both sides
// expand to braid words on the same strand count and are compared in the
// mapping class group (after gamma, up to inner automorphism).
//
// The mirror fields hold the identity as it would read under the opposite
// product convention: conjugations keep their conjugator as a unit with the
// exponent sign flipped, plain products get their displayed factor order
// reversed. A failing identity whose mirror passes pinpoints a backwards
// transcription rather than a false statement.
struct Identity {
  std::string label;
  std::string category;
  NamedWord lhs;
  NamedWord rhs;
  NamedWord lhs_mirror;
  NamedWord rhs_mirror;
  int n = 1;
};

// Every identity the calculus rests on, for the given n and k-mode:
// the braid and commutation relations, the spherical relation, full-twist
// triviality, the defining words for s_i and r_i, the wicket relation
// r_1...r_n s_n...s_1 t_1 = 1, and the mode's conjugation identities.
std::vector<Identity> identity_catalog(int n, KMode kmode);

enum class VerifyResult { Pass, Fail, FailMirrorPasses };

std::string verify_result_name(VerifyResult r);

// PASS iff gamma(lhs) equals gamma(rhs) up to inner automorphism.
// When that fails but both sides with their factor order reversed agree,
// reports FailMirrorPasses: the identity holds under the opposite product
// convention, which flags a transcription with backwards conjugations.
VerifyResult verify_identity(const Identity& id, int n);

struct ConventionReport {
  Convention adopted = Convention::RightmostFirst;
  bool flipped = false;       // true if the self-test forced the mirror order
  std::string selftest;       // label of the identity used
  std::string outcome;        // "pass" or "flipped"
};

// Runs the order-sensitive self-test (A^-1 s_1 A = s_2 at n = 2) and flips
// the process-wide convention if only the mirrored order validates.
// Never flips silently: the report carries the outcome.
ConventionReport resolve_convention();

struct IdentityRecord {
  std::string label;
  std::string category;
  int n = 1;
  KMode kmode = KMode::K2;
  VerifyResult result = VerifyResult::Fail;
  double wall_ms = 0.0;
};

std::vector<IdentityRecord> verify_catalog(int n, KMode kmode);

struct GenerationRecord {
  std::string target;
  std::size_t target_sigma_letters = 0;
  std::size_t rewrite_alphabet_letters = 0;
  std::size_t rewrite_sigma_letters = 0;
  bool pass = false;
  double wall_ms = 0.0;
};

struct GenerationReport {
  int n = 1;
  KMode kmode = KMode::K2;
  std::vector<GenerationRecord> records;
  bool all_pass = false;
  std::vector<std::string> three_gen_labels;
  // Adding the deck transformation of the cover on top of the three
  // generators yields a four-element set upstairs.
  int handlebody_generator_count = 4;
};

// Rewrites every standard generator of the mode's group over the 3-element
// set and checks it against its defining word in the mapping class group.
// Stops at the first failing pair (the offending record is last).
GenerationReport verify_generation(int n, KMode kmode);

}  // namespace hilden
