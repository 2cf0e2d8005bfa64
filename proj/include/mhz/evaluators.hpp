#pragma once

#include "mhz/indexsets.hpp"
#include "mhz/multipoly.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>

namespace mhz {

struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct EvalReport {
  int n;
  AlphaVec alpha;
  MultiIndex N;
  Variant variant;
  bool polar = false;
  std::optional<Rat> value; // present iff !polar
  std::optional<KVector> witness;
  long term_count = 0; // (k, v) pairs summed
};

nlohmann::ordered_json report_json(const EvalReport& report);

// Y_n(alpha; -N) = (-1)^n sum_{k in T(N)} prod_{j>=2} C(d_j,k_j) b_j^{k_j}
//                  * alpha_1^{d_1} / prod_j d_j
EvalReport y_value(const AlphaVec& alpha, const MultiIndex& N, Variant variant);

// Y_{n,a}(alpha; -N): the k-series with alpha_1 -> alpha_1 + a_1 and each
// base b_j -> b_j + a_j, expanded as a polynomial in a_1..a_n
MultiPoly y_shifted_poly(const AlphaVec& alpha, const MultiIndex& N,
                         Variant variant); // throws pole_error

// zeta_n(alpha; -N) via the Bernoulli pipeline:
// eval_poly(bernoullize(y_shifted_poly), 0)
EvalReport zeta_value(const AlphaVec& alpha, const MultiIndex& N, Variant variant);

// audit path: the explicit double sum
// (-1)^n sum_k sum_v A(-N) prod_j B_{v_j} / prod_j d_j
EvalReport zeta_value_direct(const AlphaVec& alpha, const MultiIndex& N,
                             Variant variant);

// zeta_{n,a}(alpha; -N) = bernoullize(y_shifted_poly) evaluated at a
Rat zeta_shifted(const AlphaVec& alpha, const MultiIndex& N,
                 const std::vector<Rat>& a, Variant variant);

// equal-shift specialization (classical multiple Hurwitz)
EvalReport zeta_hurwitz_special(const Rat& alpha_scalar, const MultiIndex& N,
                                Variant variant);

// all shifts 1: multiple zeta values at non-positive integers
EvalReport mzv_nonpositive(const MultiIndex& N, Variant variant);

} // namespace mhz
