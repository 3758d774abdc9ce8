#include "whp/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "whp/core_quotient.hpp"

namespace whp {

namespace {

void validate_query(const Partition& lambda, int p, long j) {
    if (p < 1) throw std::invalid_argument("cycle length p must be >= 1");
    if (j < 0 || p * j > lambda.size())
        throw std::invalid_argument("cycle type (p^j, 1^...) does not fit |lambda|");
}

/*
 * Sum over all ways of choosing one subpartition per quotient component with
 * the given total size. Each choice is mapped back to a partition with the
 * same p-core and contributes (-1)^height times its tableau count, weighted
 * by the number of saturated descent chains in the product lattice that end
 * there (a multinomial times per-component skew tableau counts) -- the sum
 * runs over j-step chains, so endpoints carry their path multiplicity.
 */
Int path_sum_rec(const Partition& lambda, int p, long j,
                 const std::vector<std::vector<std::vector<Partition>>>& by_size,
                 const std::vector<Partition>& components, std::size_t component, long remaining,
                 std::vector<Partition>& chosen, const Int& chains, const Int& removed_factorials) {
    if (component == by_size.size()) {
        if (remaining != 0) return 0;
        const Partition reduced = compose_with_core_of(lambda, p, chosen);
        const long height = height_p(lambda, reduced, p);
        Int multinomial, rem;
        mpz_tdiv_qr(multinomial.get_mpz_t(), rem.get_mpz_t(), factorial(j).get_mpz_t(),
                    removed_factorials.get_mpz_t());
        if (rem != 0) throw std::logic_error("non-integral multinomial coefficient");
        const Int weight = multinomial * chains * path_count(reduced);
        return height % 2 ? -weight : weight;
    }
    Int total = 0;
    const auto& sizes = by_size[component];
    for (long s = 0; s < static_cast<long>(sizes.size()) && s <= remaining; ++s) {
        const long removed = components[component].size() - s;
        for (const Partition& sub : sizes[static_cast<std::size_t>(s)]) {
            chosen.push_back(sub);
            total += path_sum_rec(lambda, p, j, by_size, components, component + 1, remaining - s,
                                  chosen, Int(chains * skew_path_count(components[component], sub)),
                                  Int(removed_factorials * factorial(removed)));
            chosen.pop_back();
        }
    }
    return total;
}

}  // namespace

Int character_path_sum(const Partition& lambda, int p, long j) {
    validate_query(lambda, p, j);
    // p = 1 means the identity class regardless of j.
    if (j == 0 || p == 1) return path_count(lambda);
    const QuotientDataP q = core_and_quotient_p(lambda, p);
    const long d = q.quotient_size();
    if (d < j) return 0;

    std::vector<std::vector<std::vector<Partition>>> by_size(q.components.size());
    for (std::size_t i = 0; i < q.components.size(); ++i) {
        by_size[i].resize(static_cast<std::size_t>(q.components[i].size()) + 1);
        for (const Partition& sub : sub_partitions(q.components[i]))
            by_size[i][static_cast<std::size_t>(sub.size())].push_back(sub);
    }
    std::vector<Partition> chosen;
    return path_sum_rec(lambda, p, j, by_size, q.components, 0, d - j, chosen, Int(1), Int(1));
}

namespace {

Int mn_rec(const Partition& lambda, const std::vector<long>& cycles, std::size_t idx,
           std::map<std::pair<std::vector<long>, std::size_t>, Int>& memo) {
    if (idx == cycles.size()) return path_count(lambda);
    const auto key = std::make_pair(lambda.parts(), idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Int total = 0;
    for (const auto& [next, height] : remove_border_strips(lambda, static_cast<int>(cycles[idx]))) {
        const Int value = mn_rec(next, cycles, idx + 1, memo);
        total += height % 2 ? -value : value;
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace

Int character_mn_oracle(const Partition& lambda, int p, long j) {
    validate_query(lambda, p, j);
    std::vector<long> cycles(static_cast<std::size_t>(j), p);
    std::map<std::pair<std::vector<long>, std::size_t>, Int> memo;
    return mn_rec(lambda, cycles, 0, memo);
}

Int character_mn_full(const Partition& lambda, const Partition& cycle_type) {
    if (cycle_type.size() != lambda.size())
        throw std::invalid_argument("cycle type must be a partition of |lambda|");
    std::vector<long> cycles;
    for (long part : cycle_type.parts())
        if (part >= 2) cycles.push_back(part);
    std::map<std::pair<std::vector<long>, std::size_t>, Int> memo;
    return mn_rec(lambda, cycles, 0, memo);
}

}  // namespace whp
