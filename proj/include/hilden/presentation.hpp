#pragma once

#include <string>
#include <vector>

#include "hilden/bigint.hpp"
#include "hilden/int_matrix.hpp"

namespace hilden {

// Finitely presented group: generator names plus relators. A relator is a
// sequence of signed 1-based generator indices, same encoding as free-group
// letters.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<std::int32_t>> relators;
};

// Invariants of the abelianization: Z^betti plus one cyclic factor per
// torsion entry; the torsion entries are > 1 and divide in order.
struct AbelianInvariants {
  int betti = 0;
  std::vector<BigInt> torsion;

  bool operator==(const AbelianInvariants&) const = default;

  std::string str() const;  // e.g. "Z + Z2 + Z2", trivial group prints "0"
};

// Exponent-sum matrix of the presentation: one row per relator, one column
// per generator.
IntMatrix relation_matrix(const Presentation& p);

// Throws std::invalid_argument on a relator letter outside the generator
// list.
AbelianInvariants abelian_invariants(const Presentation& p);

// Minimal generator count of the abelian group: betti + #torsion. A lower
// bound for the minimal generator count of the group itself.
int min_generators_lower_bound(const AbelianInvariants& inv);

}  // namespace hilden
