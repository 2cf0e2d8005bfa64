#include "mhz/evaluators.hpp"
#include "mhz/oracles.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mhz;

namespace {

AlphaVec alpha_from(const std::vector<std::string>& parts) {
  std::vector<Rat> alphas;
  alphas.reserve(parts.size());
  for (const std::string& p : parts) alphas.push_back(parse_rat(p));
  return AlphaVec(alphas);
}

py::dict report_dict(const EvalReport& report) {
  py::dict d;
  d["n"] = report.n;
  py::list alpha;
  for (const Rat& a : report.alpha.alphas) alpha.append(rat_str(a));
  d["alpha"] = alpha;
  d["N"] = report.N.entries;
  d["variant"] = variant_name(report.variant);
  d["polar"] = report.polar;
  if (report.polar) {
    d["witness"] = report.witness->entries;
  } else {
    d["value"] = rat_str(*report.value);
  }
  d["term_count"] = report.term_count;
  return d;
}

} // namespace

PYBIND11_MODULE(_mhz, m) {
  m.doc() = "exact special values of generalized multiple Hurwitz zeta "
            "functions at non-positive integers";

  m.def(
      "value",
      [](const std::vector<std::string>& alpha, const std::vector<long>& N,
         const std::string& variant) {
        return report_dict(
            zeta_value(alpha_from(alpha), MultiIndex(N), parse_variant(variant)));
      },
      py::arg("alpha"), py::arg("N"), py::arg("variant") = "corrected",
      "evaluate at -N; rationals travel as 'p/q' strings");

  m.def(
      "hurwitz_special",
      [](const std::string& alpha, long N) {
        EvalReport r = zeta_hurwitz_special(parse_rat(alpha), MultiIndex({N}),
                                            Variant::corrected);
        return rat_str(*r.value);
      },
      py::arg("alpha"), py::arg("N"), "one-variable value at -N");

  m.def(
      "oracle",
      [](const std::vector<std::string>& alpha, const std::vector<long>& N,
         bool allow_irregular) {
        return rat_str(
            oracle_zeta(alpha_from(alpha), MultiIndex(N), allow_irregular));
      },
      py::arg("alpha"), py::arg("N"), py::arg("allow_irregular") = false,
      "independent iterated-sum evaluation at -N");

  m.def(
      "is_polar",
      [](const std::vector<long>& N) { return is_polar(MultiIndex(N)).polar; },
      py::arg("N"), "guarded scan for vanishing denominator factors");

  m.def(
      "bernoulli",
      [](unsigned long m) { return rat_str(bernoulli_cache().number(m)); },
      py::arg("m"), "Bernoulli number B_m as 'p/q'");

  m.def(
      "bernoulli_polynomial",
      [](unsigned long m) {
        Poly1 p = bernoulli_polynomial(m);
        std::vector<std::string> coefs;
        coefs.reserve(p.size());
        for (const Rat& c : p) coefs.push_back(rat_str(c));
        return coefs;
      },
      py::arg("m"), "ascending coefficients of B_m(x) as 'p/q' strings");
}
