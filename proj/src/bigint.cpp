#include "facthankel/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace facthankel {

namespace {

constexpr std::uint64_t kLimbBase = 1ull << 32;

// Largest power of ten below 2^32, used for decimal conversion.
constexpr std::uint32_t kDecimalChunk = 1000000000u;
constexpr int kDecimalChunkDigits = 9;

}  // namespace

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by working in unsigned space.
  std::uint64_t magnitude =
      value < 0 ? ~static_cast<std::uint64_t>(value) + 1
                : static_cast<std::uint64_t>(value);
  while (magnitude != 0) {
    limbs_.push_back(static_cast<Limb>(magnitude & 0xffffffffu));
    magnitude >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitudes(const std::vector<Limb>& a,
                               const std::vector<Limb>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<BigInt::Limb> BigInt::add_magnitudes(const std::vector<Limb>& a,
                                                 const std::vector<Limb>& b) {
  const std::vector<Limb>& longer = a.size() >= b.size() ? a : b;
  const std::vector<Limb>& shorter = a.size() >= b.size() ? b : a;
  std::vector<Limb> result;
  result.reserve(longer.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < longer.size(); ++i) {
    std::uint64_t sum = carry + longer[i];
    if (i < shorter.size()) sum += shorter[i];
    result.push_back(static_cast<Limb>(sum & 0xffffffffu));
    carry = sum >> 32;
  }
  if (carry != 0) result.push_back(static_cast<Limb>(carry));
  return result;
}

std::vector<BigInt::Limb> BigInt::sub_magnitudes(const std::vector<Limb>& a,
                                                 const std::vector<Limb>& b) {
  std::vector<Limb> result;
  result.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    result.push_back(static_cast<Limb>(diff));
  }
  while (!result.empty() && result.back() == 0) result.pop_back();
  return result;
}

std::vector<BigInt::Limb> BigInt::mul_magnitudes(const std::vector<Limb>& a,
                                                 const std::vector<Limb>& b) {
  std::vector<Limb> result(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = result[i + j] + ai * b[j] + carry;
      result[i + j] = static_cast<Limb>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = result[k] + carry;
      result[k] = static_cast<Limb>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!result.empty() && result.back() == 0) result.pop_back();
  return result;
}

// Schoolbook long division on normalized limbs (Knuth's algorithm D).
void BigInt::divmod_magnitudes(const std::vector<Limb>& a,
                               const std::vector<Limb>& b,
                               std::vector<Limb>& quotient,
                               std::vector<Limb>& remainder) {
  quotient.clear();
  remainder.clear();
  if (compare_magnitudes(a, b) < 0) {
    remainder = a;
    return;
  }
  if (b.size() == 1) {
    std::uint64_t divisor = b[0];
    quotient.assign(a.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a[i];
      quotient[i] = static_cast<Limb>(cur / divisor);
      rem = cur % divisor;
    }
    while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
    if (rem != 0) remainder.push_back(static_cast<Limb>(rem));
    return;
  }

  // Normalize so the top divisor limb has its high bit set.
  unsigned shift = 0;
  for (Limb top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;

  const std::size_t n = b.size();
  const std::size_t m = a.size() - n;

  std::vector<Limb> divisor(n);
  for (std::size_t i = n; i-- > 0;) {
    divisor[i] = b[i] << shift;
    if (shift != 0 && i > 0) divisor[i] |= b[i - 1] >> (32 - shift);
  }

  std::vector<Limb> rem(a.size() + 1, 0);
  for (std::size_t i = a.size(); i-- > 0;) {
    rem[i] = a[i] << shift;
    if (shift != 0 && i > 0) rem[i] |= a[i - 1] >> (32 - shift);
  }
  if (shift != 0) rem[a.size()] = a.back() >> (32 - shift);

  quotient.assign(m + 1, 0);
  const std::uint64_t top_divisor = divisor[n - 1];
  const std::uint64_t next_divisor = divisor[n - 2];

  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t numerator =
        (static_cast<std::uint64_t>(rem[j + n]) << 32) | rem[j + n - 1];
    std::uint64_t q_hat = numerator / top_divisor;
    std::uint64_t r_hat = numerator % top_divisor;
    if (q_hat >= kLimbBase) {
      q_hat = kLimbBase - 1;
      r_hat = numerator - q_hat * top_divisor;
    }
    while (r_hat < kLimbBase &&
           q_hat * next_divisor > ((r_hat << 32) | rem[j + n - 2])) {
      --q_hat;
      r_hat += top_divisor;
    }

    // rem[j .. j+n] -= q_hat * divisor
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t product = q_hat * divisor[i] + carry;
      carry = product >> 32;
      std::int64_t diff = static_cast<std::int64_t>(rem[i + j]) -
                          static_cast<std::int64_t>(product & 0xffffffffu) -
                          borrow;
      if (diff < 0) {
        diff += static_cast<std::int64_t>(kLimbBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      rem[i + j] = static_cast<Limb>(diff);
    }
    std::int64_t top_diff = static_cast<std::int64_t>(rem[j + n]) -
                            static_cast<std::int64_t>(carry) - borrow;
    if (top_diff < 0) {
      // q_hat was one too large; add the divisor back.
      top_diff += static_cast<std::int64_t>(kLimbBase);
      --q_hat;
      std::uint64_t add_carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum =
            static_cast<std::uint64_t>(rem[i + j]) + divisor[i] + add_carry;
        rem[i + j] = static_cast<Limb>(sum & 0xffffffffu);
        add_carry = sum >> 32;
      }
      top_diff += static_cast<std::int64_t>(add_carry);
      top_diff &= 0xffffffff;
    }
    rem[j + n] = static_cast<Limb>(top_diff);
    quotient[j] = static_cast<Limb>(q_hat);
  }

  while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();

  // Undo the normalization shift on the remainder.
  rem.resize(n);
  if (shift != 0) {
    for (std::size_t i = 0; i < n; ++i) {
      rem[i] >>= shift;
      if (i + 1 < n) rem[i] |= rem[i + 1] << (32 - shift);
    }
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  remainder = std::move(rem);
}

BigInt BigInt::abs() const {
  BigInt result = *this;
  if (result.sign_ < 0) result.sign_ = 1;
  return result;
}

BigInt BigInt::operator-() const {
  BigInt result = *this;
  result.sign_ = -result.sign_;
  return result;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
  if (sign_ == 0) return rhs;
  if (rhs.sign_ == 0) return *this;
  BigInt result;
  if (sign_ == rhs.sign_) {
    result.sign_ = sign_;
    result.limbs_ = add_magnitudes(limbs_, rhs.limbs_);
    return result;
  }
  int cmp = compare_magnitudes(limbs_, rhs.limbs_);
  if (cmp == 0) return BigInt();
  if (cmp > 0) {
    result.sign_ = sign_;
    result.limbs_ = sub_magnitudes(limbs_, rhs.limbs_);
  } else {
    result.sign_ = rhs.sign_;
    result.limbs_ = sub_magnitudes(rhs.limbs_, limbs_);
  }
  return result;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
  if (sign_ == 0 || rhs.sign_ == 0) return BigInt();
  BigInt result;
  result.sign_ = sign_ * rhs.sign_;
  result.limbs_ = mul_magnitudes(limbs_, rhs.limbs_);
  return result;
}

void BigInt::div_mod(const BigInt& a, const BigInt& b, BigInt& quotient,
                     BigInt& remainder) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  if (a.sign_ == 0) {
    quotient = BigInt();
    remainder = BigInt();
    return;
  }
  std::vector<Limb> q, r;
  divmod_magnitudes(a.limbs_, b.limbs_, q, r);
  BigInt quot, rem;
  quot.limbs_ = std::move(q);
  quot.sign_ = quot.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  rem.limbs_ = std::move(r);
  rem.sign_ = rem.limbs_.empty() ? 0 : a.sign_;
  quotient = std::move(quot);
  remainder = std::move(rem);
}

BigInt BigInt::operator/(const BigInt& rhs) const {
  BigInt q, r;
  div_mod(*this, rhs, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
  BigInt q, r;
  div_mod(*this, rhs, q, r);
  return r;
}

BigInt BigInt::divide_exact(const BigInt& divisor) const {
  BigInt q, r;
  div_mod(*this, divisor, q, r);
  if (!r.is_zero()) throw std::logic_error("BigInt: inexact division");
  return q;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs();
  BigInt y = b.abs();
  while (!y.is_zero()) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::size_t bits = (limbs_.size() - 1) * kLimbBits;
  Limb top = limbs_.back();
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

BigInt BigInt::shifted_left(std::size_t bits) const {
  if (sign_ == 0 || bits == 0) return *this;
  const std::size_t limb_shift = bits / kLimbBits;
  const unsigned bit_shift = static_cast<unsigned>(bits % kLimbBits);
  BigInt result;
  result.sign_ = sign_;
  result.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t value = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
    result.limbs_[i + limb_shift] |= static_cast<Limb>(value & 0xffffffffu);
    result.limbs_[i + limb_shift + 1] |= static_cast<Limb>(value >> 32);
  }
  result.trim();
  return result;
}

BigInt BigInt::shifted_right(std::size_t bits) const {
  if (sign_ == 0 || bits == 0) return *this;
  const std::size_t limb_shift = bits / kLimbBits;
  if (limb_shift >= limbs_.size()) return BigInt();
  const unsigned bit_shift = static_cast<unsigned>(bits % kLimbBits);
  BigInt result;
  result.sign_ = sign_;
  result.limbs_.assign(limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift),
                       limbs_.end());
  if (bit_shift != 0) {
    for (std::size_t i = 0; i < result.limbs_.size(); ++i) {
      result.limbs_[i] >>= bit_shift;
      if (i + 1 < result.limbs_.size()) {
        result.limbs_[i] |= result.limbs_[i + 1] << (kLimbBits - bit_shift);
      }
    }
  }
  result.trim();
  return result;
}

bool BigInt::operator==(const BigInt& rhs) const {
  return sign_ == rhs.sign_ && limbs_ == rhs.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) {
    return sign_ < rhs.sign_ ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  int cmp = compare_magnitudes(limbs_, rhs.limbs_) * sign_;
  if (cmp < 0) return std::strong_ordering::less;
  if (cmp > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt BigInt::from_string(std::string_view text) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("BigInt: empty numeral");
  }
  BigInt result;
  const BigInt chunk_base(static_cast<long long>(kDecimalChunk));
  std::uint32_t chunk = 0;
  int chunk_digits = 0;
  // Process a leading partial chunk so the remaining length is a multiple
  // of the chunk width.
  std::size_t digits = text.size() - pos;
  std::size_t head = digits % kDecimalChunkDigits;
  if (head == 0) head = kDecimalChunkDigits;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("BigInt: invalid digit in numeral");
    }
    chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
    ++chunk_digits;
    if (static_cast<std::size_t>(chunk_digits) == head) {
      result = result * chunk_base + BigInt(static_cast<long long>(chunk));
      chunk = 0;
      chunk_digits = 0;
      head = kDecimalChunkDigits;
    }
  }
  if (sign < 0) result = -result;
  return result;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<Limb> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<Limb>(cur / kDecimalChunk);
      rem = cur % kDecimalChunk;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int i = 0; i < kDecimalChunkDigits; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

long long BigInt::to_long_long() const {
  if (sign_ == 0) return 0;
  if (limbs_.size() > 2) throw std::overflow_error("BigInt: value too large");
  std::uint64_t magnitude = limbs_[0];
  if (limbs_.size() == 2) magnitude |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (sign_ > 0) {
    if (magnitude > static_cast<std::uint64_t>(
                        std::numeric_limits<long long>::max())) {
      throw std::overflow_error("BigInt: value too large");
    }
    return static_cast<long long>(magnitude);
  }
  std::uint64_t min_magnitude =
      static_cast<std::uint64_t>(std::numeric_limits<long long>::max()) + 1;
  if (magnitude > min_magnitude) {
    throw std::overflow_error("BigInt: value too large");
  }
  if (magnitude == min_magnitude) return std::numeric_limits<long long>::min();
  return -static_cast<long long>(magnitude);
}

}  // namespace facthankel
