#include "facthankel/float_lab.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "facthankel/combinatorics.hpp"
#include "facthankel/hankel.hpp"

namespace facthankel {

FloatMatrix::FloatMatrix(std::size_t order)
    : order_(order), entries_(order * order, 0.0) {
  if (order == 0) throw std::invalid_argument("matrix order must be >= 1");
}

FloatMatrix FloatMatrix::identity(std::size_t order) {
  FloatMatrix result(order);
  for (std::size_t i = 0; i < order; ++i) result.at(i, i) = 1.0;
  return result;
}

FloatMatrix to_float(const RationalMatrix& matrix) {
  FloatMatrix result(matrix.order());
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    for (std::size_t j = 0; j < matrix.order(); ++j) {
      result.at(i, j) = matrix.at(i, j).to_double();
    }
  }
  return result;
}

FloatMatrix lu_inverse(const FloatMatrix& matrix) {
  const std::size_t n = matrix.order();
  FloatMatrix lu = matrix;
  std::vector<std::size_t> pivot(n);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double best = std::fabs(lu.at(col, col));
    for (std::size_t row = col + 1; row < n; ++row) {
      double candidate = std::fabs(lu.at(row, col));
      if (candidate > best) {
        best = candidate;
        pivot_row = row;
      }
    }
    if (lu.at(pivot_row, col) == 0.0) throw SingularMatrixError();
    pivot[col] = pivot_row;
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(lu.at(col, j), lu.at(pivot_row, j));
      }
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      double factor = lu.at(row, col) / lu.at(col, col);
      lu.at(row, col) = factor;
      for (std::size_t j = col + 1; j < n; ++j) {
        lu.at(row, j) -= factor * lu.at(col, j);
      }
    }
  }

  // Solve for each unit vector.
  FloatMatrix inverse(n);
  std::vector<double> x(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) x[i] = (i == col) ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (pivot[i] != i) std::swap(x[i], x[pivot[i]]);
      for (std::size_t j = 0; j < i; ++j) x[i] -= lu.at(i, j) * x[j];
    }
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu.at(i, j) * x[j];
      x[i] /= lu.at(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) inverse.at(i, col) = x[i];
  }
  return inverse;
}

double max_rel_error(const FloatMatrix& approx, const RationalMatrix& exact) {
  if (approx.order() != exact.order()) {
    throw std::invalid_argument("max_rel_error: order mismatch");
  }
  const Rational one(1);
  Rational worst;
  for (std::size_t i = 0; i < approx.order(); ++i) {
    for (std::size_t j = 0; j < approx.order(); ++j) {
      Rational diff =
          (Rational::from_double(approx.at(i, j)) - exact.at(i, j)).abs();
      Rational scale = exact.at(i, j).abs();
      if (scale < one) scale = one;
      Rational err = diff / scale;
      if (err > worst) worst = std::move(err);
    }
  }
  return worst.to_double();
}

Rational cond_inf_exact(std::size_t n) {
  return inf_norm(hankel(n)) * Rational(inf_norm(inverse_closed_form(n)));
}

FloatMatrix inverse_closed_form_float(std::size_t order) {
  if (order == 0) throw std::invalid_argument("order must be >= 1");
  const long long n = static_cast<long long>(order);

  std::vector<double> fact(2 * order + 1, 1.0);
  for (std::size_t v = 1; v < fact.size(); ++v) {
    fact[v] = fact[v - 1] * static_cast<double>(v);
  }
  // Pascal triangle in binary64, built by the same additions as the exact
  // table.
  std::vector<std::vector<double>> binom(2 * order + 1);
  for (std::size_t r = 0; r < binom.size(); ++r) {
    binom[r].assign(r + 1, 1.0);
    for (std::size_t c = 1; c < r; ++c) {
      binom[r][c] = binom[r - 1][c - 1] + binom[r - 1][c];
    }
  }
  auto binom_at = [&binom](long long upper, long long lower) -> double {
    if (lower < 0 || lower > upper) return 0.0;
    return binom[static_cast<std::size_t>(upper)]
                [static_cast<std::size_t>(lower)];
  };

  FloatMatrix result(order);
  for (long long i = 1; i <= n; ++i) {
    for (long long j = 1; j <= n; ++j) {
      double sum = 0.0;
      for (long long k = 0; k <= i - 1; ++k) {
        sum += binom_at(n - i + k, j - 1) * binom_at(n + k - 1, k);
      }
      double entry = fact[static_cast<std::size_t>(i - 1)] *
                     fact[static_cast<std::size_t>(j)] *
                     binom_at(n - 1, i - 1) * binom_at(n + j - 1, j) * sum;
      if (parity_sign(n + i + j + 1) < 0) entry = -entry;
      result.at(static_cast<std::size_t>(i - 1),
                static_cast<std::size_t>(j - 1)) = entry;
    }
  }
  return result;
}

std::vector<ErrorReport> study(std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("study: n_max must be >= 1");
  std::vector<ErrorReport> reports;
  reports.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ErrorReport report;
    report.n = n;

    RationalMatrix h = hankel(n);
    RationalMatrix exact_inverse = inverse_closed_form(n).to_rational();
    report.cond_inf = inf_norm(h) * inf_norm(exact_inverse);

    try {
      report.lu_max_rel_err =
          max_rel_error(lu_inverse(to_float(h)), exact_inverse);
    } catch (const SingularMatrixError&) {
      report.lu_max_rel_err = std::numeric_limits<double>::infinity();
    }
    report.formula_max_rel_err =
        max_rel_error(inverse_closed_form_float(n), exact_inverse);
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace facthankel
