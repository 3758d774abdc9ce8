#pragma once

#include <utility>
#include <vector>

#include "whp/polynomial.hpp"

namespace whp {

/*
 * Rational-function identity in pairwise distinct points x_1..x_n:
 *   sum_j x_j(x_j-1) prod_{i != j} (x_j-x_i-2)/(x_j-x_i)
 *     = sum_j (x_j-n+j)(x_j-n-j+1).
 * Returns both sides; they agree. Throws on duplicate entries.
 */
std::pair<Rat, Rat> identity_check(const std::vector<Rat>& xs);

/*
 * Verifies the same identity symbolically in n indeterminates by clearing
 * the Vandermonde denominator and expanding both sides as multivariate
 * polynomials. Exponential in n; intended for n <= 4.
 */
bool identity_check_symbolic(int n);

}  // namespace whp
