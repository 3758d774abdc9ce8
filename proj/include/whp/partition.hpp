#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace whp {

using Int = mpz_class;
using Rat = mpq_class;

/*
 * A partition is a weakly decreasing vector of positive integers.
 * The empty vector is the empty partition. Trailing zeros are stripped
 * on construction, so the stored form is canonical.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    static Partition parse(const std::string& text);

    const std::vector<long>& parts() const { return parts_; }
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    long size() const;
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // n_i = lambda_i + length - i - 1 (0-indexed); strictly decreasing.
    std::vector<long> degree_vector() const;

    Partition conjugate() const;

    // Containment order on Young diagrams.
    bool contains(const Partition& other) const;

    std::string to_string() const;  // "4,2,2,1", "-" for the empty partition

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<long> parts_;
};

struct HookTable {
    std::vector<std::vector<long>> hooks;     // ragged, shape of lambda
    std::vector<std::vector<long>> contents;  // content j - i per cell
};

HookTable hook_table(const Partition& lambda);

// Product of all hook lengths.
Int hook_product(const Partition& lambda);

// Sum of contents over all cells.
long content_sum(const Partition& lambda);

// Number of standard Young tableaux, |lambda|! / H(lambda).
Int path_count(const Partition& lambda);

// Number of saturated chains mu -> lambda in the Young lattice.
// Throws std::invalid_argument if mu is not contained in lambda.
Int skew_path_count(const Partition& lambda, const Partition& mu);

std::vector<Partition> covers_below(const Partition& lambda);
std::vector<Partition> covers_above(const Partition& lambda);

// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(long n);

// All partitions contained in lambda (including the empty one and lambda).
std::vector<Partition> sub_partitions(const Partition& lambda);

Int factorial(long n);
Int binomial(long n, long k);

}  // namespace whp
