#pragma once

#include "mhz/bernoulli.hpp"
#include "mhz/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace mhz {

using Exponents = std::vector<unsigned>;

// graded lexicographic: lower total degree first, then lex
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse exact polynomial in a_1..a_n; zero coefficients are never stored,
// so equality is structural equality.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars);
  static MultiPoly constant(int nvars, const Rat& value);
  static MultiPoly monomial(int nvars, const Exponents& exps, const Rat& coef);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rat, GradedLexLess>& terms() const { return terms_; }
  Rat coefficient(const Exponents& exps) const;
  unsigned total_degree() const; // 0 for the zero polynomial

  MultiPoly& add_term(const Exponents& exps, const Rat& coef);

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  MultiPoly scaled(const Rat& c) const;
  bool operator==(const MultiPoly& other) const = default;

  Rat eval(const std::vector<Rat>& point) const;

  // graded-lex descending, "coef * a1^e1 a2^e2" joined with " + "
  std::string str() const;

 private:
  int nvars_;
  std::map<Exponents, Rat, GradedLexLess> terms_;
};

// monomial -> Bernoulli substitution: each prod a_i^{L_i} becomes
// prod B_{L_i}(a_i), expanded
MultiPoly bernoullize(const MultiPoly& p);

// exact integral of q(a + t) over t in [0,1]^nvars, as polynomial in a;
// inverse of bernoullize
MultiPoly cube_integrate_shifted(const MultiPoly& q);

} // namespace mhz
