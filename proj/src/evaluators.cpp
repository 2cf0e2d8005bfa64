#include "mhz/evaluators.hpp"

#include <cassert>

namespace mhz {

namespace {

std::vector<Rat> variant_bases(const AlphaVec& alpha, Variant variant) {
  if (variant == Variant::corrected) return alpha.increments();
  return std::vector<Rat>(alpha.alphas.begin() + 1, alpha.alphas.end());
}

void check_dims(const AlphaVec& alpha, const MultiIndex& N) {
  if (alpha.dim() != N.dim())
    throw std::invalid_argument("alpha and N dimensions differ");
}

long product_of(const std::vector<long>& d) {
  long p = 1;
  for (long x : d) {
    assert(x != 0 && "vanishing denominator factor outside a detected pole");
    p *= x;
  }
  return p;
}

// (c + a_var)^e expanded in variable `var`
MultiPoly power_of_linear(int nvars, int var, const Rat& c, long e) {
  MultiPoly out(nvars);
  Exponents exps(nvars, 0);
  for (long t = 0; t <= e; ++t) {
    exps[var] = static_cast<unsigned>(t);
    out.add_term(exps, Rat(binomial(static_cast<unsigned long>(e),
                                    static_cast<unsigned long>(t))) *
                           pow_rat(c, static_cast<unsigned long>(e - t)));
  }
  return out;
}

long count_kv_pairs(const MultiIndex& N) {
  long count = 0;
  for (const KVector& k : enumerate_T(N)) {
    std::vector<long> d = denominator_factors(N, k);
    long c = d[0] + 1;
    for (long kj : k.entries) c *= kj + 1;
    count += c;
  }
  return count;
}

EvalReport polar_report(const AlphaVec& alpha, const MultiIndex& N,
                        Variant variant, const PolarScan& scan) {
  EvalReport report{N.dim(), alpha, N, variant};
  report.polar = true;
  report.witness = scan.witness;
  return report;
}

} // namespace

nlohmann::ordered_json report_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  nlohmann::ordered_json alphas = nlohmann::ordered_json::array();
  for (const Rat& a : report.alpha.alphas) alphas.push_back(rat_str(a));
  j["alpha"] = alphas;
  j["N"] = report.N.entries;
  j["variant"] = variant_name(report.variant);
  j["polar"] = report.polar;
  if (report.value) j["value"] = rat_str(*report.value);
  if (report.witness) j["witness"] = report.witness->entries;
  j["term_count"] = report.term_count;
  return j;
}

EvalReport y_value(const AlphaVec& alpha, const MultiIndex& N, Variant variant) {
  check_dims(alpha, N);
  PolarScan scan = is_polar(N);
  if (scan.polar) return polar_report(alpha, N, variant, scan);

  int n = N.dim();
  std::vector<Rat> bases = variant_bases(alpha, variant);
  Rat acc(0);
  long terms = 0;
  for (const KVector& k : enumerate_T(N)) {
    std::vector<long> d = denominator_factors(N, k);
    Rat term = pow_rat(alpha.alphas[0], static_cast<unsigned long>(d[0]));
    for (int j = 2; j <= n; ++j) {
      long kj = k.entries[j - 2];
      term *= Rat(binomial(static_cast<unsigned long>(d[j - 1]),
                           static_cast<unsigned long>(kj)));
      term *= pow_rat(bases[j - 2], static_cast<unsigned long>(kj));
    }
    acc += term / Rat(product_of(d));
    ++terms;
  }
  if (n % 2 != 0) acc = -acc;

  EvalReport report{n, alpha, N, variant};
  report.value = acc;
  report.term_count = terms;
  return report;
}

MultiPoly y_shifted_poly(const AlphaVec& alpha, const MultiIndex& N,
                         Variant variant) {
  check_dims(alpha, N);
  PolarScan scan = is_polar(N);
  if (scan.polar) throw pole_error("polar point");

  int n = N.dim();
  std::vector<Rat> bases = variant_bases(alpha, variant);
  MultiPoly acc(n);
  for (const KVector& k : enumerate_T(N)) {
    std::vector<long> d = denominator_factors(N, k);
    Rat scale = Rat(1) / Rat(product_of(d));
    for (int j = 2; j <= n; ++j)
      scale *= Rat(binomial(static_cast<unsigned long>(d[j - 1]),
                            static_cast<unsigned long>(k.entries[j - 2])));
    MultiPoly term = power_of_linear(n, 0, alpha.alphas[0], d[0]);
    for (int j = 2; j <= n; ++j)
      term = term * power_of_linear(n, j - 1, bases[j - 2], k.entries[j - 2]);
    acc = acc + term.scaled(scale);
  }
  if (n % 2 != 0) acc = acc.scaled(Rat(-1));
  return acc;
}

EvalReport zeta_value(const AlphaVec& alpha, const MultiIndex& N, Variant variant) {
  check_dims(alpha, N);
  PolarScan scan = is_polar(N);
  if (scan.polar) return polar_report(alpha, N, variant, scan);

  MultiPoly q = bernoullize(y_shifted_poly(alpha, N, variant));
  EvalReport report{N.dim(), alpha, N, variant};
  report.value = q.eval(std::vector<Rat>(N.dim(), Rat(0)));
  report.term_count = count_kv_pairs(N);
  return report;
}

EvalReport zeta_value_direct(const AlphaVec& alpha, const MultiIndex& N,
                             Variant variant) {
  check_dims(alpha, N);
  PolarScan scan = is_polar(N);
  if (scan.polar) return polar_report(alpha, N, variant, scan);

  int n = N.dim();
  Rat acc(0);
  long terms = 0;
  for (const KVector& k : enumerate_T(N)) {
    std::vector<long> d = denominator_factors(N, k);
    Rat inv_den = Rat(1) / Rat(product_of(d));
    // odometer over v_1 <= d_1, v_j <= k_j
    std::vector<long> v(n, 0);
    std::vector<long> vmax(n);
    vmax[0] = d[0];
    for (int j = 2; j <= n; ++j) vmax[j - 1] = k.entries[j - 2];
    for (;;) {
      Rat term = coefficient_A(N, k, v, alpha, variant) * inv_den;
      for (int j = 0; j < n; ++j)
        term *= bernoulli_number(static_cast<unsigned long>(v[j]));
      acc += term;
      ++terms;
      int pos = 0;
      while (pos < n && v[pos] == vmax[pos]) v[pos++] = 0;
      if (pos == n) break;
      ++v[pos];
    }
  }
  if (n % 2 != 0) acc = -acc;

  EvalReport report{n, alpha, N, variant};
  report.value = acc;
  report.term_count = terms;
  return report;
}

Rat zeta_shifted(const AlphaVec& alpha, const MultiIndex& N,
                 const std::vector<Rat>& a, Variant variant) {
  if (static_cast<int>(a.size()) != N.dim())
    throw std::invalid_argument("shift vector length mismatch");
  return bernoullize(y_shifted_poly(alpha, N, variant)).eval(a);
}

EvalReport zeta_hurwitz_special(const Rat& alpha_scalar, const MultiIndex& N,
                                Variant variant) {
  return zeta_value(AlphaVec::broadcast(alpha_scalar, N.dim()), N, variant);
}

EvalReport mzv_nonpositive(const MultiIndex& N, Variant variant) {
  return zeta_value(AlphaVec::broadcast(Rat(1), N.dim()), N, variant);
}

} // namespace mhz
