#pragma once

#include "mhz/rational.hpp"

#include <mutex>
#include <vector>

namespace mhz {

// univariate polynomial over Rat, coefficients by ascending degree
using Poly1 = std::vector<Rat>;

Rat poly1_eval(const Poly1& p, const Rat& x);
Poly1 poly1_shift(const Poly1& p, const Rat& c); // p(x + c)
Rat poly1_integral_01(const Poly1& p);

// Memoized Bernoulli numbers, B_1 = -1/2 convention.  Entries are computed
// once via the recurrence sum_{j<m} C(m+1,j) B_j = -(m+1) B_m and never
// change afterwards; the lock makes concurrent fill idempotent.
class BernoulliCache {
 public:
  Rat number(unsigned long m);
  unsigned long computed() const; // entries currently in the table

  // on-disk format: one record per line, "m<TAB>p/q", ascending contiguous m
  void load(const std::string& path);       // silently ignores a missing file
  bool save(const std::string& path) const; // atomic: temp file + rename

 private:
  void extend(unsigned long m); // caller holds the lock
  mutable std::mutex lock_;
  std::vector<Rat> table_;
};

BernoulliCache& bernoulli_cache(); // process-wide instance

Rat bernoulli_number(unsigned long m);

// B_m(x) = sum_j C(m,j) B_j x^(m-j)
Poly1 bernoulli_polynomial(unsigned long m);

} // namespace mhz
