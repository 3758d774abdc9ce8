#pragma once

#include <utility>
#include <vector>

#include "whp/partition.hpp"
#include "whp/polynomial.hpp"

namespace whp {

/*
 * The Appell family with exponential generating function exp(tx - t^p/p):
 * q_n = x q_{n-1} - ((n-1)!/(n-p)!) q_{n-p} with q_n = x^n for n < p.
 * p = 2 gives the monic Hermite polynomials; p = 1 gives (x-1)^n.
 */
IntPoly q_poly(int p, long n);

// Independent closed form: q_n = sum_j (-1)^j n!/(j!(n-pj)!p^j) x^{n-pj}.
IntPoly q_poly_expansion(int p, long n);

enum class AppellMethod { determinant, recurrence, characters };

// Wr[q_{n_1},...,q_{n_l}] / Delta(n_lambda) for the p-family; monic of
// degree |lambda| with integer coefficients; the three methods agree.
IntPoly wronskian_appell(int p, const Partition& lambda, AppellMethod method);

struct AppellFactorization {
    Partition lambda;
    int p = 2;
    long core_size = 0;  // size of the p-core
    IntPoly remainder;   // R(y), monic of degree |p-quotient|
    IntPoly full;        // full(x) = x^core_size * R(x^p)
    int h_parity = 0;
    Int r0;              // R(0) = (-1)^h * H_{non-p-fold}(lambda) / H(core)
};

// Requires p >= 2 (for p = 1 there is no nontrivial factorization).
AppellFactorization factor_p(int p, const Partition& lambda);

// Remainder coefficients reproduced by the coefficient recurrence
// F r_j = -(|lambda|!/(pj(|lambda|-p)!)) sum (-1)^height F~ r~_{j-1}.
IntPoly remainder_via_recurrence(int p, const Partition& lambda);

// Remainder coefficients from the hook-length closed form over the
// p-quotient lattice.
IntPoly remainder_via_hooks(int p, const Partition& lambda);

/*
 * Generic Appell sequence given by its constants z_j (z_0 = 1):
 * A_n = sum_j C(n,j) z_j x^{n-j}. The z vector must cover degree n.
 */
RatPoly appell_poly(const std::vector<Rat>& z, long n);

RatPoly wronskian_appell_generic(const std::vector<Rat>& z, const Partition& lambda);

// Closed form for the two coefficients after the leading one:
// (C(n,1) z_1, c(lambda)(z_2 - z_1^2) + C(n,2) z_1^2). Requires |lambda| >= 2.
std::pair<Rat, Rat> appell_leading_coeffs(const std::vector<Rat>& z, const Partition& lambda);

}  // namespace whp
