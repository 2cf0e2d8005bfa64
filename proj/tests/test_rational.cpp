#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mhz/rational.hpp"

#include <random>
#include <stdexcept>

using namespace mhz;

TEST_CASE("rat constructor canonicalizes and rejects zero denominators") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(rat(3, -6) == rat(-1, 2));
  CHECK(rat(7) == Rat(7));
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rat accepts p and p/q with optional sign") {
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("-3/4") == rat(-3, 4));
  CHECK(parse_rat("+3/4") == rat(3, 4));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("0") == Rat(0));
  CHECK(parse_rat("6/4") == rat(3, 2)); // canonicalized on parse
}

TEST_CASE("parse_rat rejects malformed literals") {
  for (const char* bad : {"", "3/", "/4", "a", "1.5", "1/2/3", "1 /2", "--3",
                          "3/0", "0/0", " 3"}) {
    CHECK_THROWS_AS(parse_rat(bad), std::invalid_argument);
  }
}

TEST_CASE("rat_str and parse_rat round trip") {
  CHECK(rat_str(rat(-5, 10)) == "-1/2");
  CHECK(rat_str(Rat(42)) == "42");
  CHECK(rat_str(Rat(0)) == "0");

  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    Rat r = rat(num(rng), den(rng));
    CHECK(parse_rat(rat_str(r)) == r);
  }
}

TEST_CASE("binomial matches Pascal's rule and vanishes above the diagonal") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(52, 5) == 2598960);
  for (unsigned long n = 1; n <= 30; ++n)
    for (unsigned long k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("gen_binomial extends the binomial to rational tops") {
  CHECK(gen_binomial(rat(1, 2), 2) == rat(-1, 8));
  CHECK(gen_binomial(Rat(-2), 3) == Rat(-4));
  CHECK(gen_binomial(Rat(7), 0) == Rat(1));
  CHECK(gen_binomial(Rat(0), 4) == Rat(0));
  // agrees with the integer binomial on integer tops
  for (unsigned long n = 0; n <= 12; ++n)
    for (unsigned long k = 0; k <= 14; ++k)
      CHECK(gen_binomial(Rat(static_cast<long>(n)), k) == Rat(binomial(n, k)));
  // Pascal for rational tops: C(r,k) = C(r-1,k-1) + C(r-1,k)
  Rat r = rat(7, 3);
  for (unsigned long k = 1; k <= 9; ++k)
    CHECK(gen_binomial(r, k) ==
          gen_binomial(r - 1, k - 1) + gen_binomial(r - 1, k));
}

TEST_CASE("pow_rat uses the 0^0 = 1 convention") {
  CHECK(pow_rat(Rat(0), 0) == Rat(1));
  CHECK(pow_rat(Rat(0), 5) == Rat(0));
  CHECK(pow_rat(rat(2, 3), 3) == rat(8, 27));
  CHECK(pow_rat(rat(-1, 2), 2) == rat(1, 4));
  CHECK(pow_rat(rat(-1, 2), 3) == rat(-1, 8));
  CHECK(pow_rat(Rat(17), 1) == Rat(17));
}

TEST_CASE("to_double is the exact quotient rounded") {
  CHECK(to_double(rat(1, 2)) == doctest::Approx(0.5));
  CHECK(to_double(rat(-1, 3)) == doctest::Approx(-1.0 / 3.0));
}
