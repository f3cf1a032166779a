#ifndef FACTHANKEL_FLOAT_LAB_HPP
#define FACTHANKEL_FLOAT_LAB_HPP

#include <cstddef>
#include <vector>

#include "facthankel/matrix.hpp"
#include "facthankel/rational.hpp"

namespace facthankel {

// Dense square matrix of binary64 values.
class FloatMatrix {
 public:
  explicit FloatMatrix(std::size_t order);
  static FloatMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  double& at(std::size_t row, std::size_t col) {
    return entries_[row * order_ + col];
  }
  double at(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }

  bool operator==(const FloatMatrix& rhs) const = default;

 private:
  std::size_t order_;
  std::vector<double> entries_;
};

// Entrywise nearest binary64, ties to even. Throws std::overflow_error if
// any entry exceeds the binary64 range.
FloatMatrix to_float(const RationalMatrix& matrix);

// Inverse by LU factorization with partial pivoting in binary64. Throws
// SingularMatrixError on an exactly zero pivot.
FloatMatrix lu_inverse(const FloatMatrix& matrix);

// max over entries of |approx_ij - exact_ij| / max(|exact_ij|, 1). The
// difference is formed in exact arithmetic (binary64 values are dyadic
// rationals) and rounded once at the end.
double max_rel_error(const FloatMatrix& approx, const RationalMatrix& exact);

// Exact infinity-norm condition number of hankel(n), computed from the
// exact matrix and its exact integer inverse.
Rational cond_inf_exact(std::size_t n);

// The closed-form inverse evaluated entirely in binary64, with the same
// summation order as the exact route (k ascending, then prefactor, then
// sign), so deviations are attributable to rounding alone.
FloatMatrix inverse_closed_form_float(std::size_t n);

// Per-order conditioning record. lu_max_rel_err is +infinity when the LU
// factorization broke down on a zero pivot.
struct ErrorReport {
  std::size_t n = 0;
  Rational cond_inf;
  double lu_max_rel_err = 0.0;
  double formula_max_rel_err = 0.0;
};

// Reports for every order 1..n_max, in order.
std::vector<ErrorReport> study(std::size_t n_max);

}  // namespace facthankel

#endif  // FACTHANKEL_FLOAT_LAB_HPP
