#pragma once

#include <utility>

#include "whp/partition.hpp"
#include "whp/polynomial.hpp"

namespace whp {

enum class HermiteMethod { determinant, recurrence, characters, hooks };

// Monic (probabilist) Hermite polynomial of degree n.
IntPoly hermite(long n);

/*
 * The Wronskian of the Hermite polynomials indexed by the degree vector of
 * lambda, normalized by the Vandermonde determinant of that vector. Monic of
 * degree |lambda| with integer coefficients. The four methods are
 * independent computation routes and agree exactly:
 *   determinant - Wronskian matrix + Bareiss elimination + exact division,
 *   recurrence  - coefficientwise lattice recurrence over domino removals,
 *   characters  - expansion whose x^{n-2j} coefficient is a character value,
 *   hooks       - closed-form remainder coefficients from hook-length data.
 */
IntPoly wronskian_hermite(const Partition& lambda, HermiteMethod method);

struct HermiteFactorization {
    Partition lambda;
    long core_size = 0;  // k(k+1)/2, the multiplicity of the zero at 0
    IntPoly remainder;   // R(y), monic of degree |mu| + |nu|
    IntPoly full;        // full(x) = x^core_size * R(x^2)
    int h_parity = 0;    // sign exponent parity in the constant-term formula
    Int r0;              // R(0) != 0
};

HermiteFactorization remainder_polynomial(const Partition& lambda);

// Second-highest remainder coefficient r_1 by two routes:
// first = -(sum of contents of lambda), second = the closed form in terms of
// the 2-quotient (mu, nu, k). Throws if the quotient is empty (no such
// coefficient).
std::pair<Int, Int> subleading_coefficient(const Partition& lambda);

// Checks R_lambda(y) == (-1)^deg * R_{lambda'}(-y) exactly.
bool conjugation_check(const Partition& lambda);

}  // namespace whp
