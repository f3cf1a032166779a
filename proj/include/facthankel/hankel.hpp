#ifndef FACTHANKEL_HANKEL_HPP
#define FACTHANKEL_HANKEL_HPP

#include <cstddef>

#include "facthankel/matrix.hpp"

namespace facthankel {

/*
 * The factorial Hankel matrix and its exact integer inverse.
 *
 * hankel(n) has entries 1/(i+j-1)! for 1 <= i, j <= n (the `ipjfact`
 * family of test-matrix collections). Its inverse has integer entries and
 * can be evaluated by three independent closed-form routes, which must
 * agree entrywise:
 *
 *   - inverse_closed_form: sign * (i-1)! j! C(n-1,i-1) C(n+j-1,j) *
 *     sum_k C(n-i+k,j-1) C(n+k-1,k)
 *   - inverse_gover_factorial: Gover's form as a sum of factorial ratios,
 *     every summand an exact integer
 *   - inverse_gover_binomial: Gover's rewrite of the same sum in binomial
 *     coefficients, with m = i+j-1
 *
 * The two *_identity functions expose the summation identities that make
 * the closed form an inverse; they are checkable on their whole domain.
 */

RationalMatrix hankel(std::size_t n);

IntegerMatrix inverse_closed_form(std::size_t n);
IntegerMatrix inverse_gover_factorial(std::size_t n);
IntegerMatrix inverse_gover_binomial(std::size_t n);

// True iff, for this (n, i, l, k) with 1 <= i, l <= n and 0 <= k <= i-1,
//
//   sum_{j=1}^{n} (-1)^j j!/(l+j-1)! C(n+j-1,j) C(n-i+k,j-1)
//     == (-1)^{n+i+k+1} (n-l)!/(n-1)! C(n, n+l-i+k)
//
// i.e. the inner row sum of inverse-times-hankel collapses to one term.
// Throws std::invalid_argument outside the stated domain.
bool check_row_sum_identity(std::size_t n, long long i, long long l,
                            long long k);

// sum_{k=0}^{i-1} (-1)^k C(n, n+l-i+k) C(n+k-1, k) for 1 <= i, l <= n.
// Equals 1 when i == l and 0 otherwise.
// Throws std::invalid_argument outside the stated domain.
BigInt delta_sum(std::size_t n, long long i, long long l);

// Exact two-sided check that inverse_closed_form(n) inverts hankel(n).
bool verify_inverse(std::size_t n);

// Entrywise agreement of the three inverse routes at order n.
bool formulas_agree(std::size_t n);

}  // namespace facthankel

#endif  // FACTHANKEL_HANKEL_HPP
