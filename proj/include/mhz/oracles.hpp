#pragma once

#include "mhz/indexsets.hpp"

#include <vector>

namespace mhz {

// exponents s_1..s_n in the absolute-convergence region (all >= 2);
// used only by the numeric validation paths
struct SignatureS {
  explicit SignatureS(std::vector<long> entries_);
  int dim() const { return static_cast<int>(entries.size()); }
  std::vector<long> entries;
};

struct Tolerance {
  double abs_eps = 1e-6;
  long cutoff = 10000;
};

// iterated-limit values are regularization-independent only away from the
// singular directions; conservative predicate: every suffix sum
// N_j + .. + N_n (j < n) must be odd
bool regular_point(const MultiIndex& N);

// Independent exact evaluation by iterated Faulhaber recursion: sum the
// innermost index first (giving -B_{N_n+1}(M_{n-1}+alpha_n)/(N_n+1) as a
// polynomial in the partial sum M_{n-1}), re-expand around alpha_{n-1} via
// the shift delta = alpha_n - alpha_{n-1}, merge exponents, recurse.
Rat oracle_zeta(const AlphaVec& alpha, const MultiIndex& N,
                bool allow_irregular = false);

struct SeriesSum {
  double value;
  double tail_bound;
};

// truncated box sum of the defining series (n <= 3), with a crude
// integral-majorant tail bound; partial sums are monotone increasing
SeriesSum series_zeta_numeric(const AlphaVec& alpha, const SignatureS& s,
                              const Tolerance& tol);

struct QuadResult {
  double value;
  double error_bound;
};

// adaptive quadrature of the integral companion over [0,infty)^n (n <= 2),
// with exact inner tails and a compactified outer tail
QuadResult y_numeric(const AlphaVec& alpha, const SignatureS& s,
                     const Tolerance& tol);

struct KSeriesSum {
  double value;
  double tail_bound;
  bool converged;
};

// the k-series for the integral companion:
//   sum_k prod_{j>=2} gen_binomial(-f_j, k_j) b_j^{k_j} * alpha_1^{-f_1} / prod_j f_j
// with f_j = sum_{i>=j} s_i - (n-j+1) + sum_{i>j} k_i and b_j = delta_j
// (corrected; requires |delta_j| < alpha_{j-1}) or alpha_j (paper)
KSeriesSum y_series_numeric(const AlphaVec& alpha, const SignatureS& s,
                            Variant variant, const Tolerance& tol);

struct RaabeCheck {
  double lhs;
  double rhs;
  double margin;
  bool pass;
};

// lhs: y_numeric; rhs: quadrature over the unit cube of the truncated
// shifted series; pass iff |lhs - rhs| <= abs_eps + combined tail bounds
RaabeCheck raabe_numeric_check(const AlphaVec& alpha, const SignatureS& s,
                               const Tolerance& tol);

} // namespace mhz
