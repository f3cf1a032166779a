#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "facthankel/combinatorics.hpp"
#include "facthankel/hankel.hpp"

using facthankel::BigInt;
using facthankel::check_row_sum_identity;
using facthankel::delta_sum;
using facthankel::formulas_agree;
using facthankel::gauss_inverse;
using facthankel::hankel;
using facthankel::IntegerMatrix;
using facthankel::inverse_closed_form;
using facthankel::inverse_gover_binomial;
using facthankel::inverse_gover_factorial;
using facthankel::is_identity;
using facthankel::mat_mul;
using facthankel::parity_sign;
using facthankel::Rational;
using facthankel::RationalMatrix;
using facthankel::verify_inverse;

namespace {

IntegerMatrix matrix_from(const std::vector<std::vector<long long>>& rows) {
  IntegerMatrix matrix(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      matrix.at(i, j) = BigInt(rows[i][j]);
    }
  }
  return matrix;
}

}  // namespace

TEST_CASE("hankel matrix golden instances") {
  RationalMatrix h1 = hankel(1);
  CHECK(h1.order() == 1);
  CHECK(h1.at(0, 0) == Rational(1));

  RationalMatrix h2 = hankel(2);
  CHECK(h2.at(0, 0) == Rational(1));
  CHECK(h2.at(0, 1) == Rational(1, 2));
  CHECK(h2.at(1, 0) == Rational(1, 2));
  CHECK(h2.at(1, 1) == Rational(1, 6));

  RationalMatrix h3 = hankel(3);
  CHECK(h3.at(0, 2) == Rational(1, 6));
  CHECK(h3.at(1, 1) == Rational(1, 6));
  CHECK(h3.at(1, 2) == Rational(1, 24));
  CHECK(h3.at(2, 2) == Rational(1, 120));

  CHECK_THROWS_AS(hankel(0), std::invalid_argument);
}

TEST_CASE("hankel entries are positive and strictly decreasing along rows") {
  for (std::size_t n = 1; n <= 12; ++n) {
    RationalMatrix h = hankel(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(h.at(i, j).sign() > 0);
        CHECK(h.at(i, j) == h.at(j, i));
        if (j > 0) CHECK(h.at(i, j) < h.at(i, j - 1));
      }
    }
  }
}

TEST_CASE("inverse golden instances reproduced by the elimination oracle") {
  // The independent oracle first: exact Gaussian elimination of H.
  RationalMatrix oracle2 = gauss_inverse(hankel(2));
  IntegerMatrix golden2 = matrix_from({{-2, 6}, {6, -12}});
  CHECK(facthankel::to_integer_matrix(oracle2) == golden2);

  RationalMatrix oracle3 = gauss_inverse(hankel(3));
  IntegerMatrix golden3 =
      matrix_from({{3, -24, 60}, {-24, 168, -360}, {60, -360, 720}});
  CHECK(facthankel::to_integer_matrix(oracle3) == golden3);

  // The closed form must match the frozen values.
  CHECK(inverse_closed_form(1) == matrix_from({{1}}));
  CHECK(inverse_closed_form(2) == golden2);
  CHECK(inverse_closed_form(3) == golden3);

  CHECK_THROWS_AS(inverse_closed_form(0), std::invalid_argument);
  CHECK_THROWS_AS(inverse_gover_factorial(0), std::invalid_argument);
  CHECK_THROWS_AS(inverse_gover_binomial(0), std::invalid_argument);
}

TEST_CASE("factorial-form instances evaluated by hand") {
  CHECK(inverse_gover_factorial(1) == matrix_from({{1}}));
  // n=2: entry (1,1) is 2 * (-1)^(-1) * [2! 1! 1 / (1! 0! 1! 2!)] = -2.
  IntegerMatrix m2 = inverse_gover_factorial(2);
  CHECK(m2.at(0, 0) == BigInt(-2));
  CHECK(m2 == matrix_from({{-2, 6}, {6, -12}}));
  CHECK(inverse_gover_factorial(3) == inverse_closed_form(3));
}

TEST_CASE("binomial-form instances evaluated by hand") {
  CHECK(inverse_gover_binomial(1) == matrix_from({{1}}));
  IntegerMatrix m2 = inverse_gover_binomial(2);
  // (2,2): m=3, single k=1 term 3*1*(2-1), scaled by (-1)^(-1) * 2 * 2!.
  CHECK(m2.at(1, 1) == BigInt(-12));
  // (1,1): m=1, k=0 term needs the -1 lower index to vanish.
  CHECK(m2.at(0, 0) == BigInt(-2));
  CHECK(m2 == matrix_from({{-2, 6}, {6, -12}}));
}

TEST_CASE("the three inverse routes agree") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(formulas_agree(n));
  }
}

TEST_CASE("closed form equals the elimination oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(gauss_inverse(hankel(n)) == inverse_closed_form(n).to_rational());
  }
}

TEST_CASE("two-sided exact inverse verification") {
  CHECK(verify_inverse(1));
  CHECK(verify_inverse(7));
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(verify_inverse(n));
  }
  CHECK_THROWS_AS(verify_inverse(0), std::invalid_argument);

  RationalMatrix h5 = hankel(5);
  RationalMatrix m5 = inverse_closed_form(5).to_rational();
  CHECK(is_identity(mat_mul(m5, h5)));
  CHECK(is_identity(mat_mul(h5, m5)));
}

TEST_CASE("row-sum identity on documented instances") {
  CHECK(check_row_sum_identity(1, 1, 1, 0));
  CHECK(check_row_sum_identity(2, 1, 1, 0));  // both sides 1, lhs -2 + 3
  CHECK(check_row_sum_identity(3, 2, 1, 1));  // both sides -1, lhs -3+12-10

  CHECK_THROWS_AS(check_row_sum_identity(3, 0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_row_sum_identity(3, 1, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_row_sum_identity(3, 2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_row_sum_identity(3, 2, 1, -1), std::invalid_argument);
}

TEST_CASE("row-sum identity holds on the full grid up to order 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (long long i = 1; i <= static_cast<long long>(n); ++i) {
      for (long long l = 1; l <= static_cast<long long>(n); ++l) {
        for (long long k = 0; k <= i - 1; ++k) {
          CHECK(check_row_sum_identity(n, i, l, k));
        }
      }
    }
  }
}

TEST_CASE("delta sum collapses to the Kronecker delta") {
  CHECK(delta_sum(3, 2, 2) == BigInt(1));
  CHECK(delta_sum(3, 3, 1) == BigInt(0));  // 3 - 9 + 6
  CHECK(delta_sum(5, 2, 4) == BigInt(0));  // l > i: every summand vanishes

  for (std::size_t n = 1; n <= 8; ++n) {
    for (long long i = 1; i <= static_cast<long long>(n); ++i) {
      for (long long l = 1; l <= static_cast<long long>(n); ++l) {
        CHECK(delta_sum(n, i, l) == BigInt(i == l ? 1 : 0));
      }
    }
  }

  CHECK_THROWS_AS(delta_sum(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(delta_sum(3, 1, 4), std::invalid_argument);
}

TEST_CASE("inverse entries follow the structural pattern") {
  for (std::size_t n = 1; n <= 10; ++n) {
    IntegerMatrix m = inverse_closed_form(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(m.at(i, j) == m.at(j, i));
        CHECK_FALSE(m.at(i, j).is_zero());
        long long expected_sign =
            parity_sign(static_cast<long long>(n + i + j + 3));
        CHECK(m.at(i, j).sign() == expected_sign);
      }
    }
  }

  // The inverse is symmetric about the main diagonal only. Reflection
  // about the antidiagonal (the Toeplitz-inverse property) does not hold
  // for this family; the order-2 instance is already a counterexample.
  IntegerMatrix m2 = inverse_closed_form(2);
  CHECK(m2.at(0, 0) != m2.at(1, 1));
}
