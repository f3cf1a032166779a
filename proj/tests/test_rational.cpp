#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

#include "facthankel/rational.hpp"

using facthankel::BigInt;
using facthankel::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> num(-bound, bound);
  std::uniform_int_distribution<long long> den(1, bound);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("Rational canonical form") {
  CHECK(Rational().to_string() == "0");
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(-2, 4).to_string() == "-1/2");
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational(-2, -4).to_string() == "1/2");
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(0, 7).denominator() == BigInt(1));
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational parsing") {
  CHECK(Rational::from_string("5").to_string() == "5");
  CHECK(Rational::from_string("-3/6").to_string() == "-1/2");
  CHECK(Rational::from_string("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("Rational arithmetic identities") {
  std::mt19937_64 rng(0x2a17u);
  for (int round = 0; round < 800; ++round) {
    Rational a = random_rational(rng, 1000);
    Rational b = random_rational(rng, 1000);
    Rational c = random_rational(rng, 1000);
    CHECK(a + b == b + a);
    CHECK((a + b) - b == a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(BigInt::gcd((a + b).numerator(), (a + b).denominator()) == BigInt(1));
  }
}

TEST_CASE("Rational comparison") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(7, 2) > Rational(3));
  CHECK(Rational(1, 3).abs() == Rational(1, 3));
  CHECK(Rational(-1, 3).abs() == Rational(1, 3));
}

TEST_CASE("Rational to binary64 on simple values") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK(Rational(-1, 10).to_double() == -0.1);
  CHECK(Rational(0).to_double() == 0.0);
  CHECK(Rational(BigInt(1).shifted_left(100)).to_double() ==
        std::ldexp(1.0, 100));

  // Ties round to the even mantissa.
  CHECK(Rational(BigInt::from_string("9007199254740993")).to_double() ==
        9007199254740992.0);
  CHECK(Rational(BigInt::from_string("9007199254740995")).to_double() ==
        9007199254740996.0);

  // Smallest subnormal and just below half of it.
  CHECK(Rational(BigInt(1), BigInt(1).shifted_left(1074)).to_double() ==
        std::ldexp(1.0, -1074));
  CHECK(Rational(BigInt(1), BigInt(1).shifted_left(1076)).to_double() == 0.0);

  CHECK_THROWS_AS(Rational(BigInt(1).shifted_left(1025)).to_double(),
                  std::overflow_error);
}

TEST_CASE("Rational binary64 round trip is exact") {
  std::mt19937_64 rng(0x909u);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int round = 0; round < 2000; ++round) {
    double value = std::ldexp(mantissa(rng), exponent(rng));
    Rational exact = Rational::from_double(value);
    CHECK(exact.to_double() == value);
  }
  CHECK_THROWS_AS(Rational::from_double(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_double(HUGE_VAL), std::invalid_argument);
}

TEST_CASE("Rational rounding picks the nearest double") {
  std::mt19937_64 rng(0x5e3du);
  std::uniform_real_distribution<double> mantissa(0.5, 1.0);
  std::uniform_int_distribution<int> exponent(-120, 120);
  const Rational third(1, 3);
  for (int round = 0; round < 500; ++round) {
    double value = std::ldexp(mantissa(rng), exponent(rng));
    double ulp = std::nextafter(value, HUGE_VAL) - value;
    Rational base = Rational::from_double(value);
    Rational step = Rational::from_double(ulp);
    // Perturbations strictly inside half an ulp must not move the result.
    CHECK((base + step * third).to_double() == value);
    CHECK((base - step * third).to_double() == value);
    // Just beyond half an ulp must move it by exactly one ulp.
    Rational past_half = step * Rational(1, 2) + step * Rational(1, 1000);
    CHECK((base + past_half).to_double() == value + ulp);
  }
}

TEST_CASE("Rational to_double agrees with strtod") {
  std::mt19937_64 rng(0x77a2u);
  std::uniform_int_distribution<long long> num(1, 1'000'000'000'000ll);
  std::uniform_int_distribution<long long> den(1, 1'000'000'000'000ll);
  for (int round = 0; round < 400; ++round) {
    long long p = num(rng);
    long long q = den(rng);
    // 40 decimal places: far beyond binary64, so strtod's correctly
    // rounded result is the true nearest double unless the value sits
    // within 10^-25 relative of a tie, which random draws do not hit.
    std::string digits =
        (BigInt(p) * BigInt::from_string("1" + std::string(40, '0')) /
         BigInt(q))
            .to_string();
    std::string decimal =
        digits.size() > 40
            ? digits.substr(0, digits.size() - 40) + "." +
                  digits.substr(digits.size() - 40)
            : "0." + std::string(40 - digits.size(), '0') + digits;
    CHECK(Rational(p, q).to_double() == std::strtod(decimal.c_str(), nullptr));
  }
}
