#include "facthankel/hankel.hpp"

#include <algorithm>
#include <stdexcept>

#include "facthankel/combinatorics.hpp"

namespace facthankel {

namespace {

long long checked_order(std::size_t n) {
  if (n == 0) throw std::invalid_argument("order must be >= 1");
  return static_cast<long long>(n);
}

void require_nonnegative(long long value) {
  if (value < 0) {
    throw std::logic_error("factorial argument went negative");
  }
}

}  // namespace

RationalMatrix hankel(std::size_t n) {
  checked_order(n);
  FactorialTable fact(2 * n);
  RationalMatrix result(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      result.at(i, j) = Rational(BigInt(1), fact(i + j + 1));
    }
  }
  return result;
}

IntegerMatrix inverse_closed_form(std::size_t order) {
  const long long n = checked_order(order);
  FactorialTable fact(2 * order);
  BinomialTable binom(2 * order);
  IntegerMatrix result(order);
  for (long long i = 1; i <= n; ++i) {
    for (long long j = 1; j <= n; ++j) {
      BigInt sum(0);
      for (long long k = 0; k <= i - 1; ++k) {
        sum += binom.at(n - i + k, j - 1) * binom.at(n + k - 1, k);
      }
      BigInt entry = fact(static_cast<std::size_t>(i - 1)) *
                     fact(static_cast<std::size_t>(j)) *
                     binom.at(n - 1, i - 1) * binom.at(n + j - 1, j) * sum;
      if (parity_sign(n + i + j + 1) < 0) entry = -entry;
      result.at(static_cast<std::size_t>(i - 1),
                static_cast<std::size_t>(j - 1)) = std::move(entry);
    }
  }
  return result;
}

IntegerMatrix inverse_gover_factorial(std::size_t order) {
  const long long n = checked_order(order);
  FactorialTable fact(2 * order);
  IntegerMatrix result(order);
  auto f = [&fact](long long v) -> const BigInt& {
    require_nonnegative(v);
    return fact(static_cast<std::size_t>(v));
  };
  for (long long i = 1; i <= n; ++i) {
    for (long long j = 1; j <= n; ++j) {
      const long long k_lo = std::max(0ll, i + j - 1 - n);
      const long long k_hi = i - 1;
      if (k_lo > k_hi) {
        throw std::logic_error("empty summation range in factorial form");
      }
      BigInt sum(0);
      for (long long k = k_lo; k <= k_hi; ++k) {
        BigInt numerator = f(n + i + j - k - 2) * f(n + k - 1) *
                           BigInt(i + j - 2 * k - 1);
        BigInt denominator =
            f(i + j - k - 1) * f(k) * f(n + k - i - j + 1) * f(n - k);
        // Each summand is an exact integer; the division asserts it.
        sum += numerator.divide_exact(denominator);
      }
      BigInt entry = BigInt(n) * sum;
      if (parity_sign(n - i - j - 1) < 0) entry = -entry;
      result.at(static_cast<std::size_t>(i - 1),
                static_cast<std::size_t>(j - 1)) = std::move(entry);
    }
  }
  return result;
}

IntegerMatrix inverse_gover_binomial(std::size_t order) {
  const long long n = checked_order(order);
  FactorialTable fact(2 * order);
  BinomialTable binom(2 * order);
  IntegerMatrix result(order);
  for (long long i = 1; i <= n; ++i) {
    for (long long j = 1; j <= n; ++j) {
      const long long m = i + j - 1;
      const long long k_lo = std::max(0ll, m - n);
      const long long k_hi = i - 1;
      if (k_lo > k_hi) {
        throw std::logic_error("empty summation range in binomial form");
      }
      BigInt sum(0);
      for (long long k = k_lo; k <= k_hi; ++k) {
        // The k = 0 term sees a -1 lower argument, which is 0 by the
        // general-binomial convention.
        sum += binom.at(n + m - k - 1, n - k) * binom.at(n + k - 1, n + k - m) *
               (binom.at(m - 1, k) - binom.at(m - 1, k - 1));
      }
      BigInt entry =
          BigInt(n) * fact(static_cast<std::size_t>(m - 1)) * sum;
      if (parity_sign(n - m) < 0) entry = -entry;
      result.at(static_cast<std::size_t>(i - 1),
                static_cast<std::size_t>(j - 1)) = std::move(entry);
    }
  }
  return result;
}

bool check_row_sum_identity(std::size_t order, long long i, long long l,
                            long long k) {
  const long long n = checked_order(order);
  if (i < 1 || i > n || l < 1 || l > n || k < 0 || k > i - 1) {
    throw std::invalid_argument("check_row_sum_identity: arguments out of domain");
  }
  FactorialTable fact(2 * order);
  BinomialTable binom(2 * order);

  Rational lhs;
  for (long long j = 1; j <= n; ++j) {
    Rational term(binom.at(n + j - 1, j) * binom.at(n - i + k, j - 1) *
                      fact(static_cast<std::size_t>(j)),
                  fact(static_cast<std::size_t>(l + j - 1)));
    if (parity_sign(j) < 0) term = -term;
    lhs += term;
  }

  Rational rhs(fact(static_cast<std::size_t>(n - l)) *
                   binom.at(n, n + l - i + k),
               fact(static_cast<std::size_t>(n - 1)));
  if (parity_sign(n + i + k + 1) < 0) rhs = -rhs;
  return lhs == rhs;
}

BigInt delta_sum(std::size_t order, long long i, long long l) {
  const long long n = checked_order(order);
  if (i < 1 || i > n || l < 1 || l > n) {
    throw std::invalid_argument("delta_sum: arguments out of domain");
  }
  BinomialTable binom(2 * order);
  BigInt sum(0);
  for (long long k = 0; k <= i - 1; ++k) {
    BigInt term = binom.at(n, n + l - i + k) * binom.at(n + k - 1, k);
    if (parity_sign(k) < 0) term = -term;
    sum += term;
  }
  return sum;
}

bool verify_inverse(std::size_t n) {
  RationalMatrix h = hankel(n);
  RationalMatrix m = inverse_closed_form(n).to_rational();
  return is_identity(mat_mul(m, h)) && is_identity(mat_mul(h, m));
}

bool formulas_agree(std::size_t n) {
  IntegerMatrix closed = inverse_closed_form(n);
  return closed == inverse_gover_factorial(n) &&
         closed == inverse_gover_binomial(n);
}

}  // namespace facthankel
