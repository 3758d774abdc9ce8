#pragma once

#include <utility>
#include <vector>

#include "whp/maya.hpp"
#include "whp/partition.hpp"

namespace whp {

/*
 * 2-core / 2-quotient data: lambda = Phi(mu, nu, k) with k >= 0; the core
 * is the staircase (k, k-1, ..., 1).
 */
struct QuotientData2 {
    Partition mu;
    Partition nu;
    long k = 0;

    Partition core() const;
    long quotient_size() const { return mu.size() + nu.size(); }
};

/*
 * General p-core / p-quotient. The component tuple is canonical only up to
 * the cyclic ambiguity inherent in the p-modular convention; downstream
 * p-ops use only order-insensitive data.
 */
struct QuotientDataP {
    std::vector<Partition> components;
    Partition core;

    long quotient_size() const;
};

// The inverse of the 2-quotient map. Negative k is accepted via
// Phi(mu, nu, k) = Phi(nu, mu, -k-1).
Partition phi(const Partition& mu, const Partition& nu, long k);

QuotientData2 core_and_quotient_2(const Partition& lambda);
QuotientDataP core_and_quotient_p(const Partition& lambda, int p);

// The partition with p-quotient `components` and the same p-core as the
// decomposition anchor of `lambda`; components[i] must be contained in the
// i-th quotient component of lambda. Used to walk the quotient lattice.
Partition compose_with_core_of(const Partition& lambda, int p,
                               const std::vector<Partition>& components);

// All partitions obtainable by removing one border strip of size p,
// together with the strip height (#rows - 1).
std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int p);

// Total height over a removal sequence from lambda down to target; only the
// parity is canonical. Throws std::invalid_argument when unreachable.
long height_p(const Partition& lambda, const Partition& target, int p);

// (product of hooks not divisible by p, product of hooks divisible by p).
std::pair<Int, Int> hook_products_split(const Partition& lambda, int p);

inline Int hook_product_odd(const Partition& lambda) {
    return hook_products_split(lambda, 2).first;
}

}  // namespace whp
