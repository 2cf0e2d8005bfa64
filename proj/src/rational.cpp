#include "mhz/rational.hpp"

#include <stdexcept>

namespace mhz {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto valid = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    size_t i = from;
    if (s[i] == '+' || s[i] == '-') ++i;
    if (i >= to) return false;
    for (; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto as_int = [&](size_t from, size_t to) {
    if (text[from] == '+') ++from; // mpz_set_str rejects a leading plus
    return Int(text.substr(from, to - from));
  };
  size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid(text, 0, text.size()))
      throw std::invalid_argument("bad rational literal: " + text);
    return Rat(as_int(0, text.size()));
  }
  if (!valid(text, 0, slash) || !valid(text, slash + 1, text.size()))
    throw std::invalid_argument("bad rational literal: " + text);
  Int num = as_int(0, slash);
  Int den = as_int(slash + 1, text.size());
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rat& value) { return value.get_d(); }

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat gen_binomial(const Rat& top, unsigned long k) {
  Rat result(1);
  Rat factor(top);
  for (unsigned long i = 0; i < k; ++i) {
    result *= factor;
    result /= Rat(static_cast<unsigned long>(i + 1));
    factor -= 1;
  }
  return result;
}

Rat pow_rat(const Rat& base, unsigned long exponent) {
  if (exponent == 0) return Rat(1);
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  return r; // base canonical => base^e canonical
}

} // namespace mhz
