#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilden/int_matrix.hpp"
#include "hilden/presentation.hpp"
#include "oracles.hpp"

using namespace hilden;
using testing::minors_oracle;
using testing::random_matrix;

namespace {

void check_smith_contract(const IntMatrix& m, const SmithResult& snf) {
  CHECK(multiply(multiply(snf.U, m), snf.V) == snf.S);
  CHECK(determinant(snf.U).abs() == BigInt(1));
  CHECK(determinant(snf.V).abs() == BigInt(1));
  const int steps = std::min(snf.S.rows(), snf.S.cols());
  bool zero_seen = false;
  for (int i = 0; i < steps; ++i) {
    CHECK(snf.S.at(i, i) >= BigInt(0));
    if (snf.S.at(i, i).is_zero()) zero_seen = true;
    if (zero_seen) CHECK(snf.S.at(i, i).is_zero());
    if (i + 1 < steps && !snf.S.at(i, i).is_zero() &&
        !snf.S.at(i + 1, i + 1).is_zero())
      CHECK((snf.S.at(i + 1, i + 1) % snf.S.at(i, i)).is_zero());
  }
  for (int r = 0; r < snf.S.rows(); ++r)
    for (int c = 0; c < snf.S.cols(); ++c)
      if (r != c) CHECK(snf.S.at(r, c).is_zero());
}

}  // namespace

TEST_CASE("smith normal form fixtures") {
  IntMatrix d23(2, 2);
  d23.at(0, 0) = 2;
  d23.at(1, 1) = 3;
  const SmithResult snf = smith_normal_form(d23);
  CHECK(snf.S.at(0, 0) == BigInt(1));
  CHECK(snf.S.at(1, 1) == BigInt(6));
  check_smith_contract(d23, snf);

  const IntMatrix zero(2, 2);
  const SmithResult zsnf = smith_normal_form(zero);
  CHECK(zsnf.S == zero);
  check_smith_contract(zero, zsnf);

  IntMatrix d22(2, 2);
  d22.at(0, 0) = 2;
  d22.at(1, 1) = 2;
  const SmithResult dsnf = smith_normal_form(d22);
  CHECK(dsnf.S == d22);  // already in normal form, 2 | 2
  check_smith_contract(d22, dsnf);
}

TEST_CASE("smith normal form contract on random matrices") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(rng, 8, 20);
    check_smith_contract(m, smith_normal_form(m));
  }
}

TEST_CASE("invariant factors match the gcd-of-minors oracle") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 9);
    const SmithResult snf = smith_normal_form(m);
    CHECK(invariant_factors(snf.S) == minors_oracle(m));
  }
}

TEST_CASE("empty and degenerate shapes") {
  const IntMatrix none(0, 3);
  const SmithResult snf = smith_normal_form(none);
  CHECK(snf.S.rows() == 0);
  CHECK(snf.V == IntMatrix::identity(3));

  IntMatrix row(1, 3);
  row.at(0, 0) = 4;
  row.at(0, 2) = 6;
  const SmithResult rsn = smith_normal_form(row);
  CHECK(rsn.S.at(0, 0) == BigInt(2));
  check_smith_contract(row, rsn);
}

TEST_CASE("abelian invariants of simple presentations") {
  Presentation free_one;
  free_one.generators = {"a"};
  CHECK(abelian_invariants(free_one) == AbelianInvariants{1, {}});
  CHECK(abelian_invariants(free_one).str() == "Z");

  Presentation z2;
  z2.generators = {"a"};
  z2.relators = {{1, 1}};
  const AbelianInvariants z2inv = abelian_invariants(z2);
  CHECK(z2inv.betti == 0);
  CHECK(z2inv.torsion == std::vector<BigInt>{2});
  CHECK(z2inv.str() == "Z2");

  Presentation mixed;  // <a, b | a^4, a^2>
  mixed.generators = {"a", "b"};
  mixed.relators = {{1, 1, 1, 1}, {1, 1}};
  const AbelianInvariants minv = abelian_invariants(mixed);
  CHECK(minv.betti == 1);
  CHECK(minv.torsion == std::vector<BigInt>{2});

  Presentation bad;
  bad.generators = {"a"};
  bad.relators = {{2}};
  CHECK_THROWS_AS(abelian_invariants(bad), std::invalid_argument);
}

TEST_CASE("minimal generator lower bound") {
  AbelianInvariants thm;  // Z + Z2 + Z2
  thm.betti = 1;
  thm.torsion = {2, 2};
  CHECK(min_generators_lower_bound(thm) == 3);
  CHECK(min_generators_lower_bound(AbelianInvariants{1, {}}) == 1);
  CHECK(min_generators_lower_bound(AbelianInvariants{}) == 0);
}

TEST_CASE("abelian invariants are stable under Tietze moves on relators") {
  std::mt19937 rng(79);
  std::uniform_int_distribution<int> gens(2, 4);
  std::uniform_int_distribution<int> rels(1, 4);
  std::uniform_int_distribution<int> rlen(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    Presentation p;
    const int g = gens(rng);
    for (int i = 0; i < g; ++i) p.generators.push_back("g" + std::to_string(i));
    std::uniform_int_distribution<int> letter(1, g);
    std::uniform_int_distribution<int> coin(0, 1);
    const int R = rels(rng);
    for (int r = 0; r < R; ++r) {
      std::vector<std::int32_t> rel;
      const int L = rlen(rng);
      for (int i = 0; i < L; ++i) {
        const int x = letter(rng);
        rel.push_back(coin(rng) ? x : -x);
      }
      p.relators.push_back(std::move(rel));
    }
    const AbelianInvariants base = abelian_invariants(p);

    // conjugate relator 0 by a random word
    Presentation conj = p;
    std::vector<std::int32_t> w;
    for (int i = 0; i < 3; ++i) {
      const int x = letter(rng);
      w.push_back(coin(rng) ? x : -x);
    }
    std::vector<std::int32_t> conjugated(w);
    conjugated.insert(conjugated.end(), p.relators[0].begin(), p.relators[0].end());
    for (auto it = w.rbegin(); it != w.rend(); ++it) conjugated.push_back(-*it);
    conj.relators[0] = conjugated;
    CHECK(abelian_invariants(conj) == base);

    // invert relator 0
    Presentation inv = p;
    std::vector<std::int32_t> reversed;
    for (auto it = p.relators[0].rbegin(); it != p.relators[0].rend(); ++it)
      reversed.push_back(-*it);
    inv.relators[0] = reversed;
    CHECK(abelian_invariants(inv) == base);

    // multiply relator 0 by another relator that stays in the set
    if (p.relators.size() >= 2) {
      Presentation mul = p;
      mul.relators[0].insert(mul.relators[0].end(), p.relators.back().begin(),
                             p.relators.back().end());
      CHECK(abelian_invariants(mul) == base);
    }
  }
}
