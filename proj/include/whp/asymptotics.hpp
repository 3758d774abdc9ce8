#pragma once

#include <complex>
#include <vector>

#include "whp/partition.hpp"
#include "whp/polynomial.hpp"

namespace whp {

/*
 * The constant term R_{Phi(mu,nu,k)}(0) as an exact polynomial in k, built
 * from a finite double product over the shifted Maya diagrams of mu and nu.
 * Degree |mu| + |nu|, leading coefficient (-1)^{|nu|} 2^{|mu|+|nu|}.
 */
struct PsiPolynomial {
    Partition mu;
    Partition nu;
    IntPoly poly;  // variable is k
};

PsiPolynomial psi(const Partition& mu, const Partition& nu);

/*
 * The j-th remainder coefficient r_{Phi(mu,nu,k),j} (the coefficient of
 * y^{|mu|+|nu|-j} in R) as a polynomial in k of degree at most j. Computed by
 * exact interpolation at k = 0..j, then verified at five further k values and
 * against the closed form 2^j sum_l (-1)^l C(|mu|,j-l) C(|nu|,l) for the k^j
 * coefficient. Requires 0 <= j <= |mu| + |nu|.
 */
RatPoly coeff_in_k(const Partition& mu, const Partition& nu, long j);

/*
 * Max-abs coefficient of R_{Phi(mu,nu,k)}(2k x)/(2k)^{|mu|+|nu|} minus
 * (x+1)^{|mu|} (x-1)^{|nu|}, computed exactly; O(1/k) as k grows. Negative k
 * is accepted via Phi(mu,nu,k) = Phi(nu,mu,-k-1); k must be nonzero.
 */
Rat asymptotic_error(const Partition& mu, const Partition& nu, long k);

struct Zero {
    double re = 0.0;
    double im = 0.0;
    int multiplicity = 1;
};

struct ZeroDataset {
    Partition lambda;
    int p = 2;
    long origin_multiplicity = 0;  // exact, from the core-size factorization
    std::vector<Zero> zeros;       // the nonzero roots; multiplicities sum
                                   // with origin_multiplicity to |lambda|
};

/*
 * Numerical zeros of the degree-|lambda| Wronskian polynomial for the
 * p-family. The origin multiplicity comes exactly from the factorization
 * x^{core} R(x^p); the roots of R are found by Aberth-Ehrlich simultaneous
 * iteration (cap 200 rounds) and mapped through the p-th root. Throws on
 * non-convergence. tol is the relative residual bound (default 1e-10).
 */
ZeroDataset zeros(const Partition& lambda, double tol = 1e-10, int p = 2);

// Aberth-Ehrlich roots of a double-coefficient polynomial (low-to-high,
// nonzero leading coefficient). Exposed for testing.
std::vector<std::complex<double>> aberth_roots(const std::vector<double>& coeffs,
                                               double tol = 1e-10);

}  // namespace whp
