#include "mhz/multipoly.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mhz {

namespace {

unsigned degree_sum(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

void check_same_vars(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != q.nvars())
    throw std::invalid_argument("polynomial dimension mismatch");
}

} // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = degree_sum(a), db = degree_sum(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be positive");
}

MultiPoly MultiPoly::constant(int nvars, const Rat& value) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), value);
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& exps, const Rat& coef) {
  MultiPoly p(nvars);
  p.add_term(exps, coef);
  return p;
}

Rat MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_sum(e));
  return d;
}

MultiPoly& MultiPoly::add_term(const Exponents& exps, const Rat& coef) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (coef == 0) return *this;
  auto [it, inserted] = terms_.emplace(exps, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  check_same_vars(p, q);
  MultiPoly out(p);
  for (const auto& [e, c] : q.terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
  check_same_vars(p, q);
  MultiPoly out(p);
  for (const auto& [e, c] : q.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  check_same_vars(p, q);
  MultiPoly out(p.nvars());
  Exponents e(p.nvars());
  for (const auto& [ep, cp] : p.terms_)
    for (const auto& [eq, cq] : q.terms_) {
      for (int i = 0; i < p.nvars(); ++i) e[i] = ep[i] + eq[i];
      out.add_term(e, cp * cq);
    }
  return out;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, h] : terms_) out.terms_.emplace(e, h * c);
  return out;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point length mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term(c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term *= pow_rat(point[i], e[i]);
    acc += term;
  }
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first_term = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first_term) out << " + ";
    first_term = false;
    out << rat_str(it->second);
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      out << (first_var ? " * " : " ") << 'a' << (i + 1) << '^' << it->first[i];
      first_var = false;
    }
  }
  return out.str();
}

namespace {

// replace variable `var` in each term by the univariate image of its power,
// given by `image(L)` (coefficients ascending); shared by both transforms
MultiPoly substitute_variable(const MultiPoly& p, int var,
                              const std::function<Poly1(unsigned)>& image) {
  MultiPoly out(p.nvars());
  Exponents e(p.nvars());
  for (const auto& [exps, coef] : p.terms()) {
    Poly1 u = image(exps[var]);
    e = exps;
    for (size_t t = 0; t < u.size(); ++t) {
      if (u[t] == 0) continue;
      e[var] = static_cast<unsigned>(t);
      out.add_term(e, coef * u[t]);
    }
  }
  return out;
}

} // namespace

MultiPoly bernoullize(const MultiPoly& p) {
  MultiPoly out(p);
  for (int var = 0; var < p.nvars(); ++var)
    out = substitute_variable(out, var, [](unsigned L) {
      return bernoulli_polynomial(L);
    });
  return out;
}

MultiPoly cube_integrate_shifted(const MultiPoly& q) {
  MultiPoly out(q);
  for (int var = 0; var < q.nvars(); ++var)
    out = substitute_variable(out, var, [](unsigned L) {
      // int_0^1 (x+t)^L dt = ((x+1)^{L+1} - x^{L+1}) / (L+1)
      Poly1 u(L + 1, Rat(0));
      for (unsigned e = 0; e <= L; ++e)
        u[e] = Rat(binomial(L + 1, e)) / Rat(static_cast<unsigned long>(L + 1));
      return u;
    });
  return out;
}

} // namespace mhz
