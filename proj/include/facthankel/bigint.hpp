#ifndef FACTHANKEL_BIGINT_HPP
#define FACTHANKEL_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace facthankel {

/*
 * Arbitrary-precision signed integer.
 *
 * Representation: sign in {-1, 0, +1} plus a little-endian vector of 32-bit
 * limbs holding the magnitude. Zero is the unique value with sign 0 and an
 * empty limb vector; nonzero magnitudes never carry a leading zero limb.
 * All arithmetic is exact. Division truncates toward zero, so the remainder
 * has the sign of the dividend.
 */
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);

  // Accepts an optional leading '-' or '+' followed by decimal digits.
  static BigInt from_string(std::string_view text);
  std::string to_string() const;

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_odd() const { return sign_ != 0 && (limbs_[0] & 1u); }

  // Number of bits in the magnitude; 0 for zero.
  std::size_t bit_length() const;

  BigInt abs() const;
  BigInt operator-() const;

  BigInt operator+(const BigInt& rhs) const;
  BigInt operator-(const BigInt& rhs) const;
  BigInt operator*(const BigInt& rhs) const;
  BigInt operator/(const BigInt& rhs) const;
  BigInt operator%(const BigInt& rhs) const;

  BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
  BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
  BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }
  BigInt& operator/=(const BigInt& rhs) { return *this = *this / rhs; }

  // Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
  // Throws std::domain_error when b is zero.
  static void div_mod(const BigInt& a, const BigInt& b, BigInt& quotient,
                      BigInt& remainder);

  // Quotient of an exact division; throws std::logic_error if a remainder
  // would be discarded.
  BigInt divide_exact(const BigInt& divisor) const;

  // Greatest common divisor of the magnitudes; gcd(0, 0) = 0.
  static BigInt gcd(const BigInt& a, const BigInt& b);

  BigInt shifted_left(std::size_t bits) const;
  BigInt shifted_right(std::size_t bits) const;

  bool operator==(const BigInt& rhs) const;
  std::strong_ordering operator<=>(const BigInt& rhs) const;

  // Exact conversion; throws std::overflow_error if the value does not fit.
  long long to_long_long() const;

 private:
  using Limb = std::uint32_t;
  static constexpr unsigned kLimbBits = 32;

  int sign_ = 0;
  std::vector<Limb> limbs_;

  void trim();
  static int compare_magnitudes(const std::vector<Limb>& a,
                                const std::vector<Limb>& b);
  static std::vector<Limb> add_magnitudes(const std::vector<Limb>& a,
                                          const std::vector<Limb>& b);
  // Requires |a| >= |b|.
  static std::vector<Limb> sub_magnitudes(const std::vector<Limb>& a,
                                          const std::vector<Limb>& b);
  static std::vector<Limb> mul_magnitudes(const std::vector<Limb>& a,
                                          const std::vector<Limb>& b);
  static void divmod_magnitudes(const std::vector<Limb>& a,
                                const std::vector<Limb>& b,
                                std::vector<Limb>& quotient,
                                std::vector<Limb>& remainder);
};

inline BigInt abs(const BigInt& value) { return value.abs(); }

}  // namespace facthankel

#endif  // FACTHANKEL_BIGINT_HPP
