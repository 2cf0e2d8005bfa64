#pragma once

#include "mhz/evaluators.hpp"
#include "mhz/multipoly.hpp"
#include "mhz/oracles.hpp"

#include "json.hpp"

#include <random>
#include <string>
#include <vector>

namespace mhz::verify {

struct Case {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Suite {
  std::string name;
  std::vector<Case> cases;
  nlohmann::ordered_json extra; // e.g. the arbitration table
  bool ok() const;
};

nlohmann::ordered_json suite_json(const Suite& suite);

MultiPoly random_multipoly(std::mt19937& rng, int nvars, unsigned max_degree,
                           long coef_bound);

// classical one-dimensional law: zeta at (alpha),(N) vs -B_{N+1}(alpha)/(N+1)
Suite classical_n1();

// exact agreement with the iterated-Faulhaber oracle on the odd-sum grid,
// plus informational comparisons at irregular points (reported, not asserted)
Suite oracle_grid();

// randomized cube_integrate_shifted . bernoullize round trips + linearity
Suite bernoulli_roundtrip(unsigned seed, int count);

// direct double-sum vs the Bernoulli pipeline, both variants
Suite pipeline_agreement();

// quadrature arbitration between the two coefficient variants
Suite variant_arbitration(double eps, long cutoff);

// equal-shift and all-ones specializations defer to the general evaluator
Suite specialization();

// numeric unit-cube identity checks + the exact polynomial-level identity
Suite raabe_suite(double eps, long cutoff, unsigned seed);

// exhaustive guarded scan: no polar points, all values finite, frozen fixture
Suite pole_scan();

// frozen values computed independently before this implementation existed
Suite regression_constants();

} // namespace mhz::verify
