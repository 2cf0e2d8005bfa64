#pragma once

#include <gmpxx.h>
#include <string>

namespace mhz {

using Int = mpz_class;
using Rat = mpq_class; // gmp keeps these canonical: den > 0, gcd(num, den) = 1

Rat rat(long num, long den = 1);

// "p/q" or "p", optional sign, ASCII decimal; throws std::invalid_argument
Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& value);

double to_double(const Rat& value);

// C(n, k); zero when k > n
Int binomial(unsigned long n, unsigned long k);

// r(r-1)...(r-k+1)/k!, empty product for k = 0
Rat gen_binomial(const Rat& top, unsigned long k);

// exact power with the 0^0 = 1 convention used throughout
Rat pow_rat(const Rat& base, unsigned long exponent);

} // namespace mhz
