#ifndef FACTHANKEL_RATIONAL_HPP
#define FACTHANKEL_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include "facthankel/bigint.hpp"

namespace facthankel {

/*
 * Exact rational number, always kept canonical: the denominator is positive
 * and coprime to the numerator, and zero is stored as 0/1. Every operation
 * normalizes its result, so equality is a plain field comparison.
 */
class Rational {
 public:
  Rational() : numerator_(0), denominator_(1) {}
  Rational(long long value) : numerator_(value), denominator_(1) {}
  Rational(BigInt numerator) : numerator_(std::move(numerator)), denominator_(1) {}
  Rational(BigInt numerator, BigInt denominator);
  Rational(long long numerator, long long denominator)
      : Rational(BigInt(numerator), BigInt(denominator)) {}

  // Accepts "p" or "p/q" with optional sign on p.
  static Rational from_string(std::string_view text);
  std::string to_string() const;

  const BigInt& numerator() const { return numerator_; }
  const BigInt& denominator() const { return denominator_; }

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_integer() const { return denominator_ == BigInt(1); }
  int sign() const { return numerator_.sign(); }

  Rational abs() const;
  Rational operator-() const;

  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  // Throws std::domain_error when rhs is zero.
  Rational operator/(const Rational& rhs) const;

  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
  Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

  bool operator==(const Rational& rhs) const = default;
  std::strong_ordering operator<=>(const Rational& rhs) const;

  // Nearest binary64 value, ties to even, correct through the subnormal
  // range. Throws std::overflow_error when the value exceeds the binary64
  // range.
  double to_double() const;

  // Exact conversion of a finite binary64 value (every finite double is a
  // dyadic rational). Throws std::invalid_argument for NaN or infinities.
  static Rational from_double(double value);

 private:
  BigInt numerator_;
  BigInt denominator_;

  void normalize();
};

inline Rational abs(const Rational& value) { return value.abs(); }

}  // namespace facthankel

#endif  // FACTHANKEL_RATIONAL_HPP
