#include "facthankel/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace facthankel {

Rational::Rational(BigInt numerator, BigInt denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) {
    throw std::domain_error("Rational: zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (denominator_.is_negative()) {
    numerator_ = -numerator_;
    denominator_ = -denominator_;
  }
  if (numerator_.is_zero()) {
    denominator_ = BigInt(1);
    return;
  }
  BigInt divisor = BigInt::gcd(numerator_, denominator_);
  if (divisor != BigInt(1)) {
    numerator_ = numerator_.divide_exact(divisor);
    denominator_ = denominator_.divide_exact(divisor);
  }
}

Rational Rational::abs() const {
  Rational result = *this;
  if (result.numerator_.is_negative()) result.numerator_ = -result.numerator_;
  return result;
}

Rational Rational::operator-() const {
  Rational result = *this;
  result.numerator_ = -result.numerator_;
  return result;
}

Rational Rational::operator+(const Rational& rhs) const {
  return Rational(numerator_ * rhs.denominator_ + rhs.numerator_ * denominator_,
                  denominator_ * rhs.denominator_);
}

Rational Rational::operator-(const Rational& rhs) const {
  return Rational(numerator_ * rhs.denominator_ - rhs.numerator_ * denominator_,
                  denominator_ * rhs.denominator_);
}

Rational Rational::operator*(const Rational& rhs) const {
  return Rational(numerator_ * rhs.numerator_,
                  denominator_ * rhs.denominator_);
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(numerator_ * rhs.denominator_,
                  denominator_ * rhs.numerator_);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
  // Denominators are positive, so cross-multiplying preserves order.
  return numerator_ * rhs.denominator_ <=> rhs.numerator_ * denominator_;
}

Rational Rational::from_string(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(BigInt::from_string(text));
  }
  BigInt numerator = BigInt::from_string(text.substr(0, slash));
  std::string_view denominator_text = text.substr(slash + 1);
  if (!denominator_text.empty() &&
      (denominator_text.front() == '+' || denominator_text.front() == '-')) {
    throw std::invalid_argument("Rational: denominator must be unsigned");
  }
  return Rational(std::move(numerator), BigInt::from_string(denominator_text));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_.to_string();
  return numerator_.to_string() + "/" + denominator_.to_string();
}

double Rational::to_double() const {
  if (numerator_.is_zero()) return 0.0;
  const BigInt p = numerator_.abs();
  const BigInt& q = denominator_;

  // floor(log2(p/q)): p/q >= 2^e iff p >= q << e.
  long long e = static_cast<long long>(p.bit_length()) -
                static_cast<long long>(q.bit_length());
  {
    BigInt lhs = e >= 0 ? p : p.shifted_left(static_cast<std::size_t>(-e));
    BigInt rhs = e >= 0 ? q.shifted_left(static_cast<std::size_t>(e)) : q;
    if (lhs < rhs) --e;
  }
  if (e > 1024) throw std::overflow_error("Rational: magnitude exceeds binary64");

  // Unit in the last place of the result; clamped for subnormals.
  long long ulp_exp = e - 52;
  if (ulp_exp < -1074) ulp_exp = -1074;

  BigInt scaled_num = p;
  BigInt scaled_den = q;
  if (ulp_exp < 0) {
    scaled_num = scaled_num.shifted_left(static_cast<std::size_t>(-ulp_exp));
  } else if (ulp_exp > 0) {
    scaled_den = scaled_den.shifted_left(static_cast<std::size_t>(ulp_exp));
  }
  BigInt mantissa, remainder;
  BigInt::div_mod(scaled_num, scaled_den, mantissa, remainder);

  // Round half to even on the exact remainder.
  BigInt twice_remainder = remainder.shifted_left(1);
  if (twice_remainder > scaled_den ||
      (twice_remainder == scaled_den && mantissa.is_odd())) {
    mantissa += BigInt(1);
  }
  if (mantissa.bit_length() > 53) {
    mantissa = mantissa.shifted_right(1);
    ++ulp_exp;
  }

  double result =
      std::ldexp(static_cast<double>(mantissa.to_long_long()),
                 static_cast<int>(ulp_exp));
  if (std::isinf(result)) {
    throw std::overflow_error("Rational: magnitude exceeds binary64");
  }
  return numerator_.is_negative() ? -result : result;
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("Rational: value is not finite");
  }
  if (value == 0.0) return Rational();
  int exponent = 0;
  double fraction = std::frexp(value, &exponent);
  // fraction in [0.5, 1); 53 bits recover the full mantissa exactly.
  auto mantissa = static_cast<long long>(std::ldexp(fraction, 53));
  exponent -= 53;
  BigInt numerator(mantissa);
  if (exponent >= 0) {
    return Rational(numerator.shifted_left(static_cast<std::size_t>(exponent)));
  }
  return Rational(std::move(numerator),
                  BigInt(1).shifted_left(static_cast<std::size_t>(-exponent)));
}

}  // namespace facthankel
