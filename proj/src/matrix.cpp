#include "facthankel/matrix.hpp"

#include <utility>

namespace facthankel {

namespace {

void require_positive_order(std::size_t order) {
  if (order == 0) throw std::invalid_argument("matrix order must be >= 1");
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t order)
    : order_(order), entries_(order * order) {
  require_positive_order(order);
}

RationalMatrix RationalMatrix::identity(std::size_t order) {
  RationalMatrix result(order);
  for (std::size_t i = 0; i < order; ++i) result.at(i, i) = Rational(1);
  return result;
}

IntegerMatrix::IntegerMatrix(std::size_t order)
    : order_(order), entries_(order * order) {
  require_positive_order(order);
}

IntegerMatrix IntegerMatrix::identity(std::size_t order) {
  IntegerMatrix result(order);
  for (std::size_t i = 0; i < order; ++i) result.at(i, i) = BigInt(1);
  return result;
}

RationalMatrix IntegerMatrix::to_rational() const {
  RationalMatrix result(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      result.at(i, j) = Rational(at(i, j));
    }
  }
  return result;
}

IntegerMatrix to_integer_matrix(const RationalMatrix& matrix) {
  IntegerMatrix result(matrix.order());
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    for (std::size_t j = 0; j < matrix.order(); ++j) {
      const Rational& entry = matrix.at(i, j);
      if (!entry.is_integer()) {
        throw std::invalid_argument("matrix entry is not an integer");
      }
      result.at(i, j) = entry.numerator();
    }
  }
  return result;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("mat_mul: order mismatch");
  }
  const std::size_t n = a.order();
  RationalMatrix result(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational sum;
      for (std::size_t k = 0; k < n; ++k) {
        sum += a.at(i, k) * b.at(k, j);
      }
      result.at(i, j) = std::move(sum);
    }
  }
  return result;
}

RationalMatrix gauss_inverse(const RationalMatrix& matrix) {
  const std::size_t n = matrix.order();
  RationalMatrix work = matrix;
  RationalMatrix inverse = RationalMatrix::identity(n);

  for (std::size_t col = 0; col < n; ++col) {
    // Partial pivoting on the largest absolute value at or below the
    // diagonal; bounds intermediate entry growth.
    std::size_t pivot_row = col;
    Rational pivot_abs = work.at(col, col).abs();
    for (std::size_t row = col + 1; row < n; ++row) {
      Rational candidate = work.at(row, col).abs();
      if (candidate > pivot_abs) {
        pivot_abs = std::move(candidate);
        pivot_row = row;
      }
    }
    if (work.at(pivot_row, col).is_zero()) throw SingularMatrixError();
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(col, j), work.at(pivot_row, j));
        std::swap(inverse.at(col, j), inverse.at(pivot_row, j));
      }
    }

    Rational pivot = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= pivot;
      inverse.at(col, j) /= pivot;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || work.at(row, col).is_zero()) continue;
      Rational factor = work.at(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(row, j) -= factor * work.at(col, j);
        inverse.at(row, j) -= factor * inverse.at(col, j);
      }
    }
  }
  return inverse;
}

bool is_identity(const RationalMatrix& matrix) {
  const Rational one(1);
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    for (std::size_t j = 0; j < matrix.order(); ++j) {
      if (i == j ? matrix.at(i, j) != one : !matrix.at(i, j).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

Rational inf_norm(const RationalMatrix& matrix) {
  Rational best;
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    Rational row_sum;
    for (std::size_t j = 0; j < matrix.order(); ++j) {
      row_sum += matrix.at(i, j).abs();
    }
    if (row_sum > best) best = std::move(row_sum);
  }
  return best;
}

BigInt inf_norm(const IntegerMatrix& matrix) {
  BigInt best;
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    BigInt row_sum;
    for (std::size_t j = 0; j < matrix.order(); ++j) {
      row_sum += matrix.at(i, j).abs();
    }
    if (row_sum > best) best = std::move(row_sum);
  }
  return best;
}

}  // namespace facthankel
