#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mhz/indexsets.hpp"

#include <stdexcept>

using namespace mhz;

TEST_CASE("input structs validate their entries") {
  CHECK_THROWS_AS(MultiIndex({}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
  CHECK(MultiIndex({0, 2, 1}).dim() == 3);

  CHECK_THROWS_AS(KVector({-1}), std::invalid_argument);
  CHECK(KVector().entries.empty());

  CHECK_THROWS_AS(AlphaVec({}), std::invalid_argument);
  CHECK_THROWS_AS(AlphaVec({Rat(1), Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(AlphaVec({rat(-1, 2)}), std::invalid_argument);
  CHECK(AlphaVec({Rat(1), rat(3, 2)}).dim() == 2);
  CHECK_THROWS_AS(AlphaVec::broadcast(Rat(1), 0), std::invalid_argument);
  CHECK(AlphaVec::broadcast(rat(1, 2), 3).alphas ==
        std::vector<Rat>{rat(1, 2), rat(1, 2), rat(1, 2)});
}

TEST_CASE("increments are consecutive differences") {
  AlphaVec alpha({Rat(1), rat(3, 2), Rat(3)});
  std::vector<Rat> inc = alpha.increments();
  REQUIRE(inc.size() == 2);
  CHECK(inc[0] == rat(1, 2));
  CHECK(inc[1] == rat(3, 2));
  CHECK(AlphaVec({Rat(2)}).increments().empty());
  // equal shifts collapse every increment to zero
  for (const Rat& d : AlphaVec::broadcast(rat(5, 4), 3).increments())
    CHECK(d == 0);
}

TEST_CASE("variant names round trip") {
  CHECK(parse_variant("corrected") == Variant::corrected);
  CHECK(parse_variant("paper") == Variant::paper);
  CHECK(variant_name(Variant::corrected) == std::string("corrected"));
  CHECK(variant_name(Variant::paper) == std::string("paper"));
  CHECK_THROWS_AS(parse_variant("original"), std::invalid_argument);
}

TEST_CASE("denominator factors follow the tail recurrence") {
  // n = 1: d_1 = N_1 + 1
  CHECK(denominator_factors(MultiIndex({3}), KVector()) ==
        std::vector<long>{4});

  // n = 2, N = (1,2): d_2 = 3, d_1 = 1 + 1 + d_2 - k_2
  for (long k2 = 0; k2 <= 3; ++k2) {
    auto d = denominator_factors(MultiIndex({1, 2}), KVector({k2}));
    REQUIRE(d.size() == 2);
    CHECK(d[1] == 3);
    CHECK(d[0] == 5 - k2);
  }

  // n = 3 spot check against the defining sums
  MultiIndex N({2, 0, 1});
  KVector k({1, 1});
  auto d = denominator_factors(N, k);
  // d_3 = N_3 + 1 = 2; d_2 = N_2 + N_3 + 2 - k_3 = 2; d_1 = N_1+N_2+N_3+3-k_2-k_3 = 4
  CHECK(d == std::vector<long>{4, 2, 2});

  CHECK_THROWS_AS(denominator_factors(MultiIndex({1, 2}), KVector({0, 0})),
                  std::invalid_argument);
}

TEST_CASE("T enumeration: bounds, order, counts") {
  // n = 1: only the empty k
  auto t1 = enumerate_T(MultiIndex({5}));
  REQUIRE(t1.size() == 1);
  CHECK(t1[0].entries.empty());

  // n = 2, N = (0,0): d_2 = 1 so k_2 in {0,1}
  auto t2 = enumerate_T(MultiIndex({0, 0}));
  REQUIRE(t2.size() == 2);
  CHECK(t2[0] == KVector({0}));
  CHECK(t2[1] == KVector({1}));

  // n = 3, N = (1,1,1): d_3 = 2; d_2 = 4 - k_3; k_2 fastest, k_3 outermost
  auto t3 = enumerate_T(MultiIndex({1, 1, 1}));
  REQUIRE(t3.size() == 12);
  CHECK(t3.front() == KVector({0, 0}));
  CHECK(t3[4] == KVector({4, 0}));
  CHECK(t3[5] == KVector({0, 1}));
  CHECK(t3.back() == KVector({2, 2}));
  for (const KVector& k : t3) {
    auto d = denominator_factors(MultiIndex({1, 1, 1}), k);
    CHECK(k.entries[0] <= d[1]);
    CHECK(k.entries[1] <= d[2]);
  }
}

TEST_CASE("every denominator factor stays positive on natural points") {
  for (long n1 = 0; n1 <= 4; ++n1)
    for (long n2 = 0; n2 <= 4; ++n2)
      for (long n3 = 0; n3 <= 4; ++n3) {
        MultiIndex N({n1, n2, n3});
        CHECK(!is_polar(N).polar);
        for (const KVector& k : enumerate_T(N))
          for (long dj : denominator_factors(N, k)) CHECK(dj >= 1);
      }
  CHECK(!is_polar(MultiIndex({0})).polar);
  CHECK(!is_polar(MultiIndex({7, 0})).polar);
}

TEST_CASE("expansion coefficients: one-variable case is plain binomial") {
  // n = 1, N = (2): M = 3, A = C(3, v) alpha^(3-v); identical for both variants
  AlphaVec alpha({Rat(5)});
  MultiIndex N({2});
  for (long v = 0; v <= 3; ++v) {
    Rat expect = Rat(binomial(3, static_cast<unsigned long>(v))) *
                 pow_rat(Rat(5), static_cast<unsigned long>(3 - v));
    CHECK(coefficient_A(N, KVector(), {v}, alpha, Variant::corrected) == expect);
    CHECK(coefficient_A(N, KVector(), {v}, alpha, Variant::paper) == expect);
  }
  // v = 1 gives the 3 alpha^2 coefficient
  CHECK(coefficient_A(N, KVector(), {1}, alpha, Variant::corrected) == Rat(75));
}

TEST_CASE("expansion coefficients: variants differ only in the power bases") {
  AlphaVec alpha({Rat(1), rat(3, 2)});
  MultiIndex N({0, 0});
  // k_2 = 1: d = (1, 1), M = 1; v = (0, 0) picks up one bare base factor
  CHECK(coefficient_A(N, KVector({1}), {0, 0}, alpha, Variant::corrected) ==
        rat(1, 2));
  CHECK(coefficient_A(N, KVector({1}), {0, 0}, alpha, Variant::paper) ==
        rat(3, 2));
  // v = (0, 1) uses the base to the zeroth power: variants coincide
  CHECK(coefficient_A(N, KVector({1}), {0, 1}, alpha, Variant::corrected) ==
        coefficient_A(N, KVector({1}), {0, 1}, alpha, Variant::paper));

  // k_2 = 0 kills every base power via 0^0 = 1
  CHECK(coefficient_A(N, KVector({0}), {0, 0}, alpha, Variant::corrected) ==
        Rat(1));

  CHECK_THROWS_AS(coefficient_A(N, KVector({2}), {0, 0}, alpha,
                                Variant::corrected),
                  std::invalid_argument); // k outside T
  CHECK_THROWS_AS(coefficient_A(N, KVector({1}), {2, 0}, alpha,
                                Variant::corrected),
                  std::invalid_argument); // v_1 > M
}
