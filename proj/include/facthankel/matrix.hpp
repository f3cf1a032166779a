#ifndef FACTHANKEL_MATRIX_HPP
#define FACTHANKEL_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "facthankel/bigint.hpp"
#include "facthankel/rational.hpp"

namespace facthankel {

// Thrown when an exact elimination meets a zero pivot column.
struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

// Dense square matrix of exact rationals, row-major, zero-initialized.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t order);
  static RationalMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  Rational& at(std::size_t row, std::size_t col) {
    return entries_[row * order_ + col];
  }
  const Rational& at(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }

  bool operator==(const RationalMatrix& rhs) const = default;

 private:
  std::size_t order_;
  std::vector<Rational> entries_;
};

// Dense square matrix of exact integers.
class IntegerMatrix {
 public:
  explicit IntegerMatrix(std::size_t order);
  static IntegerMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  BigInt& at(std::size_t row, std::size_t col) {
    return entries_[row * order_ + col];
  }
  const BigInt& at(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }

  RationalMatrix to_rational() const;

  bool operator==(const IntegerMatrix& rhs) const = default;

 private:
  std::size_t order_;
  std::vector<BigInt> entries_;
};

// Narrowing conversion; throws std::invalid_argument if any entry has a
// denominator other than 1.
IntegerMatrix to_integer_matrix(const RationalMatrix& matrix);

// Exact product; throws std::invalid_argument on an order mismatch.
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

// Exact inverse by Gaussian elimination with partial pivoting on the
// rational absolute value. Throws SingularMatrixError when no nonzero
// pivot exists in a column.
RationalMatrix gauss_inverse(const RationalMatrix& matrix);

// Exact test: diagonal entries 1, off-diagonal entries 0, no tolerance.
bool is_identity(const RationalMatrix& matrix);

// Maximum absolute row sum.
Rational inf_norm(const RationalMatrix& matrix);
BigInt inf_norm(const IntegerMatrix& matrix);

}  // namespace facthankel

#endif  // FACTHANKEL_MATRIX_HPP
