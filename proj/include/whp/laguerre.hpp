#pragma once

#include "whp/partition.hpp"
#include "whp/polynomial.hpp"

namespace whp {

// Monic Laguerre polynomial of degree n with exact rational parameter:
// coefficient of x^i is (-1)^{n+i} (n!/i!) C(n+alpha, n-i).
RatPoly laguerre(long n, const Rat& alpha);

/*
 * Wronskian Laguerre polynomial indexed by two partitions. The defining
 * Wronskian mixes plain entries L_{n_j}^{(alpha)} with weighted entries
 * x^{-alpha} L_{m_j}^{(-alpha)}; the weights are handled symbolically (each
 * column tracked as x^{power} times a polynomial) so everything stays exact.
 * Monic of degree |mu| + |nu|. Throws when the index values
 * n_1..n_l(mu), m_1-alpha..m_l(nu)-alpha are not pairwise distinct.
 */
RatPoly wronskian_laguerre(const Partition& mu, const Partition& nu, const Rat& alpha);

// The e^x-weighted companion: entries L_{n_j}^{(alpha)}(x) and
// e^x L_{m_j}^{(alpha)}(-x), normalized to be monic of degree |mu| + |nu|.
// Defined for every rational alpha.
RatPoly omega_polynomial(const Partition& mu, const Partition& nu, const Rat& alpha);

// Checks R_lambda(x) = 2^{|mu|+|nu|} L_{mu,nu}^{(alpha_k)}(x/2) with
// alpha_k = -1/2 - l(mu) + l(nu) - k, where (mu, nu, k) is the 2-quotient
// data of lambda.
bool hermite_laguerre_check(const Partition& lambda);

// The companion identity R_lambda(x) = 2^{|mu|+|nu|}
// Omega_{mu,nu'}^{(alpha'_k)}(x/2) with alpha'_k = -1/2 - l(mu) - l(nu') - k.
bool hermite_omega_check(const Partition& lambda);

// Max-abs coefficient of Omega_{mu,nu}^{(alpha)}(alpha x)/alpha^{|mu|+|nu|}
// minus (x-1)^{|mu|} (x+1)^{|nu|}, exactly; goes to zero as alpha grows.
Rat omega_asymptotic_error(const Partition& mu, const Partition& nu, const Rat& alpha);

}  // namespace whp
