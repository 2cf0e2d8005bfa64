#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mhz/evaluators.hpp"
#include "mhz/oracles.hpp"

#include <cmath>
#include <stdexcept>

using namespace mhz;

TEST_CASE("signature struct validates the convergence region") {
  CHECK(SignatureS({3, 2}).dim() == 2);
  CHECK_THROWS_AS(SignatureS({}), std::invalid_argument);
  CHECK_THROWS_AS(SignatureS({1}), std::invalid_argument);
  Tolerance tol;
  CHECK(tol.abs_eps == 1e-6);
  CHECK(tol.cutoff == 10000);
}

TEST_CASE("regularity predicate: all proper suffix sums must be odd") {
  CHECK(regular_point(MultiIndex({0})));
  CHECK(regular_point(MultiIndex({4}))); // no proper suffix in one variable
  CHECK(regular_point(MultiIndex({1, 2})));
  CHECK(regular_point(MultiIndex({0, 1})));
  CHECK(!regular_point(MultiIndex({0, 0})));
  CHECK(!regular_point(MultiIndex({1, 1})));
  CHECK(regular_point(MultiIndex({0, 1, 0})));
  CHECK(!regular_point(MultiIndex({1, 1, 1}))); // N_2 + N_3 even
}

TEST_CASE("iterated-sum oracle: one-variable anchors") {
  CHECK(oracle_zeta(AlphaVec({Rat(1)}), MultiIndex({0})) == rat(-1, 2));
  CHECK(oracle_zeta(AlphaVec({Rat(1)}), MultiIndex({3})) == rat(1, 120));
  CHECK(oracle_zeta(AlphaVec({rat(1, 2)}), MultiIndex({2})) == Rat(0));
}

TEST_CASE("oracle gates irregular points behind the override") {
  AlphaVec alpha({Rat(1), Rat(1)});
  MultiIndex N({0, 0});
  CHECK_THROWS_AS(oracle_zeta(alpha, N), std::invalid_argument);
  CHECK(oracle_zeta(alpha, N, true) == rat(-1, 6));
}

TEST_CASE("oracle agrees with the evaluator on regular points") {
  AlphaVec alpha({Rat(1), rat(3, 2)});
  for (auto [n1, n2] : {std::pair<long, long>{1, 0}, {0, 1}, {2, 1}, {1, 2},
                        {3, 0}, {2, 3}}) {
    MultiIndex N({n1, n2});
    REQUIRE(regular_point(N));
    CHECK(oracle_zeta(alpha, N) ==
          *zeta_value(alpha, N, Variant::corrected).value);
  }
  AlphaVec alpha3({Rat(1), rat(3, 2), Rat(2)});
  MultiIndex N3({0, 1, 0});
  CHECK(oracle_zeta(alpha3, N3) ==
        *zeta_value(alpha3, N3, Variant::corrected).value);
}

TEST_CASE("truncated series sum brackets the classical value") {
  Tolerance tol;
  tol.cutoff = 4000;
  SeriesSum s = series_zeta_numeric(AlphaVec({Rat(1)}), SignatureS({2}), tol);
  double exact = M_PI * M_PI / 6.0;
  CHECK(s.value <= exact + 1e-12);
  CHECK(exact <= s.value + s.tail_bound + 1e-12);

  // two variables: finite value, usable tail
  Tolerance tol2;
  tol2.cutoff = 800;
  SeriesSum s2 = series_zeta_numeric(AlphaVec({Rat(1), Rat(1)}),
                                     SignatureS({3, 2}), tol2);
  CHECK(s2.value > 0);
  CHECK(s2.tail_bound < 0.05);
}

TEST_CASE("integral companion quadrature hits closed forms") {
  Tolerance tol;
  tol.abs_eps = 1e-6;

  auto close = [](const QuadResult& r, double exact, double eps) {
    return std::fabs(r.value - exact) <= r.error_bound + eps;
  };

  CHECK(close(y_numeric(AlphaVec({Rat(1)}), SignatureS({2}), tol), 1.0, 1e-6));
  CHECK(close(y_numeric(AlphaVec({Rat(1)}), SignatureS({3}), tol), 0.5, 1e-6));
  CHECK(close(y_numeric(AlphaVec({rat(1, 2)}), SignatureS({3}), tol), 2.0,
              1e-6));
  CHECK(close(y_numeric(AlphaVec({Rat(1), Rat(1)}), SignatureS({3, 2}), tol),
              1.0 / 3.0, 1e-5));
  CHECK(close(y_numeric(AlphaVec({Rat(1), Rat(1)}), SignatureS({2, 2}), tol),
              0.5, 1e-5));

  CHECK_THROWS_AS(y_numeric(AlphaVec({Rat(1), Rat(1), Rat(1)}),
                            SignatureS({2, 2, 2}), tol),
                  std::invalid_argument);
}

TEST_CASE("companion series: corrected converges, collapse is exact") {
  Tolerance tol;
  tol.abs_eps = 1e-7;
  tol.cutoff = 4000;

  // equal shifts: every base vanishes and the series collapses to one term
  KSeriesSum collapse = y_series_numeric(AlphaVec({Rat(1), Rat(1)}),
                                         SignatureS({3, 2}), Variant::corrected,
                                         tol);
  CHECK(collapse.converged);
  CHECK(std::fabs(collapse.value - 1.0 / 3.0) < 1e-10);

  AlphaVec alpha({Rat(1), rat(3, 2)});
  SignatureS s({3, 2});
  KSeriesSum series = y_series_numeric(alpha, s, Variant::corrected, tol);
  CHECK(series.converged);
  QuadResult quad = y_numeric(alpha, s, tol);
  CHECK(std::fabs(series.value - quad.value) <=
        series.tail_bound + quad.error_bound + 1e-5);

  // published bases grow without bound on the same input
  KSeriesSum runaway = y_series_numeric(alpha, s, Variant::paper, tol);
  CHECK(!runaway.converged);

  // increment-based series demands |delta_j| < alpha_{j-1}
  CHECK_THROWS_AS(y_series_numeric(AlphaVec({Rat(1), Rat(3)}), s,
                                   Variant::corrected, tol),
                  std::invalid_argument);
}

TEST_CASE("unit-cube averaging identity holds numerically") {
  Tolerance tol;
  tol.abs_eps = 1e-4;
  tol.cutoff = 4000;

  RaabeCheck one = raabe_numeric_check(AlphaVec({Rat(1)}), SignatureS({3}), tol);
  CHECK(one.pass);
  CHECK(std::fabs(one.lhs - one.rhs) <= one.margin);

  RaabeCheck two = raabe_numeric_check(AlphaVec({Rat(1), rat(3, 2)}),
                                       SignatureS({3, 2}), tol);
  CHECK(two.pass);
}
