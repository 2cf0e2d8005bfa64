#include "mhz/oracles.hpp"

#include "mhz/bernoulli.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mhz {

SignatureS::SignatureS(std::vector<long> entries_) : entries(std::move(entries_)) {
  if (entries.empty()) throw std::invalid_argument("empty signature");
  for (long s : entries)
    if (s < 2) throw std::invalid_argument("signature entries must be >= 2");
}

bool regular_point(const MultiIndex& N) {
  int n = N.dim();
  long suffix = 0;
  for (int j = n; j >= 2; --j) {
    suffix += N.entries[j - 1];
    if ((suffix + N.entries[j - 2]) % 2 == 0) return false;
  }
  return true;
}

namespace {

Rat oracle_rec(const std::vector<Rat>& alphas, const std::vector<long>& N) {
  size_t n = N.size();
  if (n == 1)
    return -poly1_eval(bernoulli_polynomial(static_cast<unsigned long>(N[0] + 1)),
                       alphas[0]) /
           Rat(N[0] + 1);
  // innermost index summed: -B_{N_n+1}(M_{n-1} + alpha_n)/(N_n+1); write it
  // as a polynomial in z = M_{n-1} + alpha_{n-1} via the increment shift
  Rat delta = alphas[n - 1] - alphas[n - 2];
  unsigned long m = static_cast<unsigned long>(N[n - 1] + 1);
  Poly1 q = poly1_shift(bernoulli_polynomial(m), delta);
  std::vector<Rat> alphas_head(alphas.begin(), alphas.end() - 1);
  Rat acc(0);
  for (size_t t = 0; t < q.size(); ++t) {
    if (q[t] == 0) continue;
    // z^t merges with the (n-1)-st factor: -N_{n-1} becomes -(N_{n-1}+t)
    std::vector<long> N_head(N.begin(), N.end() - 1);
    N_head[n - 2] += static_cast<long>(t);
    acc += q[t] * oracle_rec(alphas_head, N_head);
  }
  return -acc / Rat(m);
}

} // namespace

Rat oracle_zeta(const AlphaVec& alpha, const MultiIndex& N, bool allow_irregular) {
  if (alpha.dim() != N.dim())
    throw std::invalid_argument("alpha and N dimensions differ");
  if (!allow_irregular && !regular_point(N))
    throw std::invalid_argument(
        "irregular point: iterated-limit value is direction-dependent here; "
        "pass the override to force it");
  return oracle_rec(alpha.alphas, N.entries);
}

namespace {

void check_numeric_dims(const AlphaVec& alpha, const SignatureS& s, int max_n) {
  if (alpha.dim() != s.dim())
    throw std::invalid_argument("alpha and s dimensions differ");
  if (s.dim() > max_n) throw std::invalid_argument("dimension too large");
}

// sum_{m>K} (m+a)^{-s} <= integral majorant
double tail_power(double a, double s, double K) {
  return std::pow(K + a, 1.0 - s) / (s - 1.0);
}

// truncation tail of the two-level box sum, uniform over unit-cube shifts
double tail_box2(double a1, double a2, double s1, double s2, long K) {
  double piece = 0;
  for (long m1 = 0; m1 <= K; ++m1)
    piece += std::pow(m1 + a1, -s1) * tail_power(a2, s2, double(m1 + K));
  double c = std::min(a1, a2);
  piece += std::pow(K + c, 1.0 - s1 - s2) / (s1 + s2 - 1.0);
  piece += std::pow(K + c, 2.0 - s1 - s2) / ((s2 - 1.0) * (s1 + s2 - 2.0));
  return piece;
}

struct Simpson {
  double tol;
  int max_depth = 36;
  bool converged = true;

  double run(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    return rec(f, a, b, fa, fm, fb, estimate(a, b, fa, fm, fb), tol, max_depth);
  }

 private:
  static double estimate(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }
  double rec(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double eps,
             int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = estimate(a, m, fa, flm, fm);
    double right = estimate(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (depth <= 0) {
      converged = false;
      return left + right + delta / 15.0;
    }
    if (std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return rec(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           rec(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
  }
};

double quad_or_throw(const std::function<double(double)>& f, double a, double b,
                     double tol) {
  Simpson simpson{tol};
  double v = simpson.run(f, a, b);
  if (!simpson.converged)
    throw std::runtime_error("quadrature failed to converge within budget");
  return v;
}

double quad_tol_for(const Tolerance& tol) {
  return std::clamp(tol.abs_eps * 1e-3, 1e-12, 1e-7);
}

// Gauss-Legendre nodes/weights on [0,1], Newton on the Legendre recurrence
void gauss_legendre_01(int order, std::vector<double>& nodes,
                       std::vector<double>& weights) {
  nodes.resize(order);
  weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= order; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double step = p1 / dp;
      x -= step;
      if (std::fabs(step) < 1e-15) break;
    }
    nodes[i] = 0.5 * (x + 1.0);
    weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

} // namespace

SeriesSum series_zeta_numeric(const AlphaVec& alpha, const SignatureS& s,
                              const Tolerance& tol) {
  check_numeric_dims(alpha, s, 3);
  int n = s.dim();
  std::vector<double> a(n), sd(n);
  for (int i = 0; i < n; ++i) {
    a[i] = to_double(alpha.alphas[i]);
    sd[i] = double(s.entries[i]);
  }
  long K = n == 3 ? std::min<long>(tol.cutoff, 512) : std::max<long>(tol.cutoff, 1);
  double acc = 0;

  auto accumulate = [&acc](double increment) {
    assert(increment >= 0 && "series terms must be nonnegative");
    acc += increment; // partial sums monotone increasing
  };

  if (n == 1) {
    for (long m = 0; m <= K; ++m) accumulate(std::pow(m + a[0], -sd[0]));
    return {acc, tail_power(a[0], sd[0], double(K))};
  }

  if (n == 2) {
    // prefix sums of the level-2 factor turn the box sum into one pass
    std::vector<double> P(2 * K + 2);
    double run = 0;
    for (long j = 0; j <= 2 * K; ++j) {
      run += std::pow(j + a[1], -sd[1]);
      P[j + 1] = run;
    }
    for (long m1 = 0; m1 <= K; ++m1)
      accumulate(std::pow(m1 + a[0], -sd[0]) * (P[m1 + K + 1] - P[m1]));
    return {acc, tail_box2(a[0], a[1], sd[0], sd[1], K)};
  }

  // n = 3: prefix sums over the innermost level, direct loops outside
  std::vector<double> P(3 * K + 2);
  double run = 0;
  for (long j = 0; j <= 3 * K; ++j) {
    run += std::pow(j + a[2], -sd[2]);
    P[j + 1] = run;
  }
  for (long m1 = 0; m1 <= K; ++m1) {
    double f1 = std::pow(m1 + a[0], -sd[0]);
    double inner = 0;
    for (long u2 = m1; u2 <= m1 + K; ++u2)
      inner += std::pow(u2 + a[1], -sd[1]) * (P[u2 + K + 1] - P[u2]);
    accumulate(f1 * inner);
  }
  // crude factorized majorant: each factor bounded by its own shift
  double tail = 0;
  for (int i = 0; i < n; ++i) {
    double piece = tail_power(a[i], sd[i], double(K));
    for (int j = 0; j < n; ++j)
      if (j != i)
        piece *= std::pow(a[j], -sd[j]) + tail_power(a[j], sd[j], 0.0);
    tail += piece;
  }
  return {acc, tail};
}

QuadResult y_numeric(const AlphaVec& alpha, const SignatureS& s,
                     const Tolerance& tol) {
  check_numeric_dims(alpha, s, 2);
  int n = s.dim();
  double qtol = quad_tol_for(tol);
  double a1 = to_double(alpha.alphas[0]);
  double s1 = double(s.entries[0]);

  if (n == 1) {
    double R = 10.0 * std::max(1.0, a1);
    double main = quad_or_throw(
        [&](double x) { return std::pow(x + a1, -s1); }, 0.0, R, qtol);
    return {main + tail_power(a1, s1, R), 4.0 * qtol};
  }

  double a2 = to_double(alpha.alphas[1]);
  double s2 = double(s.entries[1]);
  double c = std::min(a1, a2);
  double R2 = 10.0 * std::max(1.0, a2);
  // outer cutoff sized so the analytic remainder estimate is ~qtol
  double R1 = std::max(
      10.0, std::pow((s2 - 1.0) * (s1 + s2 - 2.0) * qtol, 1.0 / (2.0 - s1 - s2)) - c);
  double inner_tol = qtol / std::max(1.0, R1);
  auto F = [&](double x1) {
    double inner = quad_or_throw(
        [&](double x2) { return std::pow(x1 + x2 + a2, -s2); }, 0.0, R2,
        inner_tol);
    return std::pow(x1 + a1, -s1) * (inner + tail_power(a2, s2, x1 + R2));
  };
  double main = quad_or_throw(F, 0.0, R1, qtol);
  // remaining [R1, infty) compactified through x = R1/u
  double tail = quad_or_throw(
      [&](double u) { return u <= 0.0 ? 0.0 : F(R1 / u) * R1 / (u * u); }, 0.0,
      1.0, qtol);
  return {main + tail, 8.0 * qtol};
}

KSeriesSum y_series_numeric(const AlphaVec& alpha, const SignatureS& s,
                            Variant variant, const Tolerance& tol) {
  if (alpha.dim() != s.dim())
    throw std::invalid_argument("alpha and s dimensions differ");
  int n = s.dim();
  std::vector<Rat> bases_exact =
      variant == Variant::corrected
          ? alpha.increments()
          : std::vector<Rat>(alpha.alphas.begin() + 1, alpha.alphas.end());
  if (variant == Variant::corrected)
    for (int j = 2; j <= n; ++j)
      if (abs(bases_exact[j - 2]) >= alpha.alphas[j - 2])
        throw std::invalid_argument(
            "divergent expansion: |delta_j| < alpha_{j-1} required");

  double a1 = to_double(alpha.alphas[0]);
  std::vector<double> b(n > 1 ? n - 1 : 0);
  for (int j = 0; j < n - 1; ++j) b[j] = to_double(bases_exact[j]);
  std::vector<long> suffix_s(n + 2, 0);
  for (int j = n; j >= 1; --j) suffix_s[j] = suffix_s[j + 1] + s.entries[j - 1];

  if (n == 1) {
    double f1 = double(suffix_s[1] - 1);
    return {std::pow(a1, -f1) / f1, 0.0, true};
  }

  // term for one k = (k_2..k_n)
  auto term_at = [&](const std::vector<long>& k) {
    double product = 1.0;
    long suffix_k = 0;
    double f1 = 0;
    for (int j = n; j >= 2; --j) {
      double fj = double(suffix_s[j] - (n - j + 1)) + double(suffix_k);
      long kj = k[j - 2];
      double gb = 1.0; // gen_binomial(-f_j, k_j)
      for (long t = 0; t < kj; ++t) gb *= (-fj - t) / double(t + 1);
      product *= gb * std::pow(b[j - 2], double(kj)) / fj;
      suffix_k += kj;
      if (j == 2) f1 = double(suffix_s[1] - n) + double(suffix_k);
    }
    return product * std::pow(a1, -f1) / f1;
  };

  // shell-by-shell over |k| = r: geometric growth of shell sums flags a
  // divergent expansion, vanishing shells certify convergence
  double acc = 0;
  double prev_shell = 0;
  int small_run = 0, grow_run = 0;
  bool converged = false;
  double last_shell = 0;
  long rmax = std::min<long>(std::max<long>(tol.cutoff, 8), 4000);
  std::vector<long> k(n - 1, 0);
  for (long r = 0; r <= rmax; ++r) {
    double shell = 0;
    // compositions of r into n-1 parts
    std::function<void(int, long)> comp = [&](int pos, long left) {
      if (pos == n - 2) {
        k[pos] = left;
        shell += term_at(k);
        return;
      }
      for (long c0 = 0; c0 <= left; ++c0) {
        k[pos] = c0;
        comp(pos + 1, left - c0);
      }
    };
    comp(0, r);
    acc += shell;
    last_shell = std::fabs(shell);
    if (last_shell <= 1e-17 * (std::fabs(acc) + 1.0)) {
      if (++small_run >= 3) {
        converged = true;
        break;
      }
    } else
      small_run = 0;
    if (r > 0 && last_shell > std::fabs(prev_shell) && last_shell > 1e-15) {
      if (++grow_run >= 8 && r >= 10) break; // diverging
    } else
      grow_run = 0;
    prev_shell = shell;
  }
  double tail = 0;
  if (converged) {
    double ratio = std::fabs(prev_shell) > 0
                       ? std::min(0.9, last_shell / std::fabs(prev_shell))
                       : 0.0;
    tail = last_shell * ratio / (1.0 - ratio);
  } else {
    tail = last_shell;
  }
  return {acc, tail, converged};
}

RaabeCheck raabe_numeric_check(const AlphaVec& alpha, const SignatureS& s,
                               const Tolerance& tol) {
  check_numeric_dims(alpha, s, 2);
  int n = s.dim();
  QuadResult lhs = y_numeric(alpha, s, tol);
  long K = std::max<long>(std::min<long>(tol.cutoff, 20000), 16);
  double a1 = to_double(alpha.alphas[0]);
  double s1 = double(s.entries[0]);

  double rhs = 0, quad_est = 0, tail_bound = 0;
  if (n == 1) {
    auto series = [&](double t) {
      double total = 0;
      for (long m = 0; m <= K; ++m) total += std::pow(m + t + a1, -s1);
      return total;
    };
    auto integrate = [&](int order) {
      std::vector<double> x, w;
      gauss_legendre_01(order, x, w);
      double total = 0;
      for (int i = 0; i < order; ++i) total += w[i] * series(x[i]);
      return total;
    };
    rhs = integrate(24);
    quad_est = std::fabs(rhs - integrate(12));
    tail_bound = tail_power(a1, s1, double(K)); // t = 0 majorizes
  } else {
    double a2 = to_double(alpha.alphas[1]);
    double s2 = double(s.entries[1]);
    // fixed (t1,t2): prefix sums over j of (j+t1+t2+a2)^{-s2} make the inner
    // window sum_{m2<=K} (m1+m2+t1+t2+a2)^{-s2} an O(1) lookup
    auto cube = [&](int order) {
      std::vector<double> x, w;
      gauss_legendre_01(order, x, w);
      std::vector<double> P(2 * K + 2), base1(K + 1);
      double total = 0;
      for (int i = 0; i < order; ++i) {
        for (long m1 = 0; m1 <= K; ++m1)
          base1[m1] = std::pow(m1 + x[i] + a1, -s1);
        for (int j = 0; j < order; ++j) {
          double tau = x[i] + x[j];
          double run = 0;
          for (long u = 0; u <= 2 * K; ++u) {
            run += std::pow(u + tau + a2, -s2);
            P[u + 1] = run;
          }
          double sum = 0;
          for (long m1 = 0; m1 <= K; ++m1)
            sum += base1[m1] * (P[m1 + K + 1] - P[m1]);
          total += w[i] * w[j] * sum;
        }
      }
      return total;
    };
    rhs = cube(24);
    quad_est = std::fabs(rhs - cube(12));
    tail_bound = tail_box2(a1, a2, s1, s2, K);
  }

  double margin = tol.abs_eps + tail_bound + quad_est + lhs.error_bound;
  return {lhs.value, rhs, margin, std::fabs(lhs.value - rhs) <= margin};
}

} // namespace mhz
