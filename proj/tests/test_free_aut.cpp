#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilden/braid.hpp"
#include "hilden/free_aut.hpp"
#include "oracles.hpp"

using namespace hilden;

TEST_CASE("identity and inner automorphisms") {
  const FreeAut id = FreeAut::identity(3);
  const FreeWord w(3, {1, -2, 3});
  CHECK(id.apply(w) == w);

  const FreeAut inn = FreeAut::inner(FreeWord(3, {1}));
  CHECK(inn.apply(FreeWord(3, {2})) == FreeWord(3, {1, 2, -1}));
  CHECK(inn.inverse().apply(inn.apply(w)) == w);
}

TEST_CASE("from_images validates mutual inversion") {
  std::vector<FreeWord> img{FreeWord(2, {2}), FreeWord(2, {1})};
  std::vector<FreeWord> inv{FreeWord(2, {2}), FreeWord(2, {1})};
  CHECK_NOTHROW(FreeAut::from_images(img, inv));

  std::vector<FreeWord> bad{FreeWord(2, {1}), FreeWord(2, {1})};
  CHECK_THROWS_AS(FreeAut::from_images(bad, bad), std::invalid_argument);
}

TEST_CASE("apply demands matching rank") {
  const FreeAut id = FreeAut::identity(3);
  CHECK_THROWS_AS(id.apply(FreeWord(2, {1})), std::invalid_argument);
}

TEST_CASE("half-twist action on the first generator") {
  // sigma_1 sends x1 to x1 x2 x1^-1 and x2 to x1.
  const FreeAut a = artin_action(4, 1, +1);
  CHECK(a.apply(FreeWord(3, {1})) == FreeWord(3, {1, 2, -1}));
  CHECK(a.apply(FreeWord(3, {2})) == FreeWord(3, {1}));
  CHECK(a.apply(FreeWord(3, {3})) == FreeWord(3, {3}));
}

TEST_CASE("composite of two half-twists, fixed by hand substitution") {
  // Rightmost acts first: sigma_2 then sigma_1.
  const FreeAut f = gamma(BraidWord(4, {1, 2}));
  CHECK(f.apply(FreeWord(3, {1})) == FreeWord(3, {1, 2, -1}));
  CHECK(f.apply(FreeWord(3, {2})) == FreeWord(3, {1, 3, -1}));
  CHECK(f.apply(FreeWord(3, {3})) == FreeWord(3, {1}));
}

TEST_CASE("compose matches nested application") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const FreeAut f = gamma(testing::random_braid_word(rng, 6, 6));
    const FreeAut g = gamma(testing::random_braid_word(rng, 6, 6));
    const FreeWord w = testing::random_free_word(rng, 5, 8);
    CHECK(compose(f, g).apply(w) == f.apply(g.apply(w)));
  }
}

TEST_CASE("compose with identity and with the inverse") {
  std::mt19937 rng(29);
  const FreeAut f = gamma(testing::random_braid_word(rng, 6, 8));
  const FreeAut id = FreeAut::identity(5);
  CHECK(compose(f, id) == f);
  CHECK(out_equal(compose(f, f.inverse()), id));
  // carried inverse tables are exact, not just inner
  CHECK(compose(f, f.inverse()) == id);
}

TEST_CASE("puncture permutation of elementary twists") {
  CHECK(FreeAut::identity(3).puncture_perm().is_identity());

  const Perm p = gamma(BraidWord(4, {1})).puncture_perm();
  CHECK(p.cycles() == "(1 2)");

  // s_1 at n=1 exchanges the two wickets: (1 3)(2 4).
  const Perm q = gamma(named_word(NamedElement::s(1), 1)).puncture_perm();
  CHECK(q.cycles() == "(1 3)(2 4)");
}

TEST_CASE("non-puncture-shaped automorphisms are rejected") {
  // x1 |-> x1^-1 is an automorphism but reverses the loop orientation.
  std::vector<FreeWord> img{FreeWord(2, {-1}), FreeWord(2, {2})};
  const FreeAut flip = FreeAut::from_images(img, img);
  CHECK_FALSE(flip.is_puncture_shaped());
  CHECK_THROWS_AS(flip.puncture_perm(), NotPunctureShaped);
}

TEST_CASE("common conjugator on the basic examples") {
  CHECK(FreeAut::identity(3).common_conjugator().value() == FreeWord(3));

  const FreeAut inn = FreeAut::inner(FreeWord(3, {1}));
  CHECK(inn.common_conjugator().value() == FreeWord(3, {1}));

  CHECK_FALSE(gamma(BraidWord(4, {1})).common_conjugator().has_value());
}

TEST_CASE("common conjugator is sound, including the last puncture loop") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const FreeWord w = testing::random_free_word(rng, 5, 6);
    const FreeAut aut = FreeAut::inner(w);
    const auto got = aut.common_conjugator();
    REQUIRE(got.has_value());
    const FreeWord conj = *got;
    for (int i = 1; i <= 6; ++i) {
      const FreeWord loop = FreeAut::identity(5).puncture_loop_image(i);
      CHECK(aut.apply(loop) == conj * loop * conj.inverse());
    }
  }
}

TEST_CASE("common conjugator agrees with brute-force search at small scale") {
  for (int rank = 2; rank <= 3; ++rank) {
    for (const FreeWord& w : testing::all_words_up_to(rank, 3)) {
      const FreeAut aut = FreeAut::inner(w);
      const auto algorithmic = aut.common_conjugator();
      const auto brute = testing::brute_force_conjugator(aut, 3);
      REQUIRE(algorithmic.has_value());
      REQUIRE(brute.has_value());
      CHECK(*algorithmic == *brute);
    }
  }
  // and on a non-inner mapping class both report nothing
  const FreeAut twist = gamma(BraidWord(4, {1}));
  CHECK_FALSE(twist.common_conjugator().has_value());
  CHECK_FALSE(testing::brute_force_conjugator(twist, 3).has_value());
}

TEST_CASE("out_equal is an equivalence compatible with inner twists") {
  std::mt19937 rng(37);
  const FreeAut f = gamma(testing::random_braid_word(rng, 6, 8));
  CHECK(out_equal(f, f));

  for (int trial = 0; trial < 40; ++trial) {
    const FreeWord w = testing::random_free_word(rng, 5, 5);
    const FreeAut g = compose(FreeAut::inner(w), f);
    CHECK(out_equal(f, g));
    CHECK(out_equal(g, f));
  }

  CHECK_FALSE(out_equal(gamma(BraidWord(4, {1})), gamma(BraidWord(4, {2}))));
  CHECK_THROWS_AS(out_equal(FreeAut::identity(2), FreeAut::identity(3)),
                  std::invalid_argument);
}
