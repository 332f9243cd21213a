#include "hilden/presentation.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hilden {

std::string AbelianInvariants::str() const {
  if (betti == 0 && torsion.empty()) return "0";
  std::string out;
  for (int i = 0; i < betti; ++i) {
    if (!out.empty()) out += " + ";
    out += "Z";
  }
  for (const BigInt& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z" + t.str();
  }
  return out;
}

IntMatrix relation_matrix(const Presentation& p) {
  const int gens = static_cast<int>(p.generators.size());
  IntMatrix m(static_cast<int>(p.relators.size()), gens);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (std::int32_t letter : p.relators[r]) {
      const int idx = std::abs(letter);
      if (letter == 0 || idx > gens)
        throw std::invalid_argument(
            "relation_matrix: relator letter outside the generator list");
      m.at(static_cast<int>(r), idx - 1) += letter > 0 ? 1 : -1;
    }
  }
  return m;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  const IntMatrix m = relation_matrix(p);
  const SmithResult snf = smith_normal_form(m);
  const std::vector<BigInt> factors = invariant_factors(snf.S);
  AbelianInvariants inv;
  inv.betti = static_cast<int>(p.generators.size()) -
              static_cast<int>(factors.size());
  for (const BigInt& d : factors) {
    if (d > BigInt(1)) inv.torsion.push_back(d);
  }
  return inv;
}

int min_generators_lower_bound(const AbelianInvariants& inv) {
  return inv.betti + static_cast<int>(inv.torsion.size());
}

}  // namespace hilden
