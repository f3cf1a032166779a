#ifndef FACTHANKEL_COMBINATORICS_HPP
#define FACTHANKEL_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include "facthankel/bigint.hpp"

namespace facthankel {

// n! for n >= 0; throws std::invalid_argument for negative n.
BigInt factorial(long long n);

/*
 * General binomial coefficient with an arbitrary integer upper argument:
 *
 *   binomial(upper, lower) = upper (upper-1) ... (upper-lower+1) / lower!
 *
 * evaluated by multiplying one factor and dividing by one index at a time;
 * the running value is an integer after every step, which the exact
 * division enforces. binomial(upper, 0) = 1, and a negative lower argument
 * yields 0.
 */
BigInt binomial(long long upper, long long lower);

// (-1)^exponent for any integer exponent, from its parity.
inline int parity_sign(long long exponent) {
  return (exponent % 2 == 0) ? 1 : -1;
}

// True iff binomial(upper, m) == (-1)^m binomial(m - upper - 1, m).
// Requires m >= 0.
bool check_reflection(long long upper, long long m);

// True iff binomial(s + t, m) == sum_k binomial(s, k) binomial(t, m - k).
// Requires m >= 0.
bool check_chu_vandermonde(long long s, long long t, long long m);

// Table of 0!, 1!, ..., max_n! computed once.
class FactorialTable {
 public:
  explicit FactorialTable(std::size_t max_n);
  const BigInt& operator()(std::size_t n) const { return values_.at(n); }

 private:
  std::vector<BigInt> values_;
};

// Pascal triangle rows 0..max_upper. Out-of-triangle lower arguments
// (negative or above the upper argument) give 0, matching the general
// binomial coefficient on non-negative integer upper arguments.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t max_upper);
  const BigInt& at(long long upper, long long lower) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

}  // namespace facthankel

#endif  // FACTHANKEL_COMBINATORICS_HPP
