#include "facthankel/combinatorics.hpp"

#include <stdexcept>

namespace facthankel {

BigInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt result(1);
  for (long long i = 2; i <= n; ++i) result *= BigInt(i);
  return result;
}

BigInt binomial(long long upper, long long lower) {
  if (lower < 0) return BigInt(0);
  if (lower == 0) return BigInt(1);
  if (upper >= 0 && upper < lower) return BigInt(0);
  BigInt result(1);
  for (long long i = 1; i <= lower; ++i) {
    result *= BigInt(upper + 1 - i);
    // The running product is binomial(upper, i) after this step, an
    // integer for every integer upper argument.
    result = result.divide_exact(BigInt(i));
  }
  return result;
}

bool check_reflection(long long upper, long long m) {
  if (m < 0) throw std::invalid_argument("check_reflection: m must be >= 0");
  BigInt reflected = binomial(m - upper - 1, m);
  if (parity_sign(m) < 0) reflected = -reflected;
  return binomial(upper, m) == reflected;
}

bool check_chu_vandermonde(long long s, long long t, long long m) {
  if (m < 0) {
    throw std::invalid_argument("check_chu_vandermonde: m must be >= 0");
  }
  BigInt sum(0);
  for (long long k = 0; k <= m; ++k) {
    sum += binomial(s, k) * binomial(t, m - k);
  }
  return binomial(s + t, m) == sum;
}

FactorialTable::FactorialTable(std::size_t max_n) {
  values_.reserve(max_n + 1);
  values_.emplace_back(1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    values_.push_back(values_.back() * BigInt(static_cast<long long>(n)));
  }
}

BinomialTable::BinomialTable(std::size_t max_upper) : zero_(0) {
  rows_.reserve(max_upper + 1);
  for (std::size_t n = 0; n <= max_upper; ++n) {
    std::vector<BigInt> row(n + 1);
    row[0] = BigInt(1);
    row[n] = BigInt(1);
    for (std::size_t k = 1; k < n; ++k) {
      row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& BinomialTable::at(long long upper, long long lower) const {
  if (upper < 0 || static_cast<std::size_t>(upper) >= rows_.size()) {
    throw std::out_of_range("BinomialTable: upper argument outside table");
  }
  if (lower < 0 || lower > upper) return zero_;
  return rows_[static_cast<std::size_t>(upper)]
              [static_cast<std::size_t>(lower)];
}

}  // namespace facthankel
