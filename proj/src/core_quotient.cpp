#include "whp/core_quotient.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace whp {

Partition QuotientData2::core() const {
    std::vector<long> parts;
    for (long i = k; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

long QuotientDataP::quotient_size() const {
    long total = 0;
    for (const auto& component : components) total += component.size();
    return total;
}

Partition phi(const Partition& mu, const Partition& nu, long k) {
    if (k < 0) return phi(nu, mu, -k - 1);
    const long lm = static_cast<long>(mu.length());
    const long ln = static_cast<long>(nu.length());
    const long s = std::max(0L, ln - lm - k);
    const long s_prime = k + lm + s - ln;
    const MayaDiagram composed =
        p_modular_compose({MayaDiagram::of(mu, s), MayaDiagram::of(nu, s_prime)});
    return composed.to_partition();
}

QuotientData2 core_and_quotient_2(const Partition& lambda) {
    const auto components = p_modular_decompose(MayaDiagram::of(lambda), 2);
    QuotientData2 q;
    q.mu = components[0].to_partition();
    q.nu = components[1].to_partition();
    q.k = components[1].filled_count() - components[0].filled_count();
    if (q.k < 0) {
        std::swap(q.mu, q.nu);
        q.k = -q.k - 1;
    }
    return q;
}

namespace {

// Decomposition anchor: shift the canonical diagram so the total dot count
// is a multiple of p. This fixes the component tuple deterministically.
std::vector<MayaDiagram> decompose_anchor(const Partition& lambda, int p) {
    const long len = static_cast<long>(lambda.length());
    const long t = (p - len % p) % p;
    return p_modular_decompose(MayaDiagram::of(lambda, t), p);
}

}  // namespace

QuotientDataP core_and_quotient_p(const Partition& lambda, int p) {
    if (p < 1) throw std::invalid_argument("core_and_quotient_p requires p >= 1");
    const auto components = decompose_anchor(lambda, p);
    QuotientDataP q;
    q.components.reserve(p);
    std::vector<Partition> empties(p);
    for (const auto& component : components) q.components.push_back(component.to_partition());
    q.core = compose_with_core_of(lambda, p, empties);
    return q;
}

Partition compose_with_core_of(const Partition& lambda, int p,
                               const std::vector<Partition>& components) {
    if (static_cast<int>(components.size()) != p)
        throw std::invalid_argument("component count must equal p");
    const auto anchor = decompose_anchor(lambda, p);
    std::vector<MayaDiagram> shifted;
    shifted.reserve(p);
    for (int i = 0; i < p; ++i) {
        const long extra =
            anchor[i].filled_count() - static_cast<long>(components[i].length());
        if (extra < 0)
            throw std::invalid_argument("component does not fit the quotient of lambda");
        shifted.push_back(MayaDiagram::of(components[i], extra));
    }
    return p_modular_compose(shifted).to_partition();
}

std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int p) {
    if (p < 1) throw std::invalid_argument("border strips require p >= 1");
    const MayaDiagram maya = MayaDiagram::of(lambda);
    std::vector<std::pair<Partition, int>> result;
    const auto& filled = maya.filled();
    for (auto it = filled.rbegin(); it != filled.rend(); ++it) {
        const long m = *it;
        if (m < p || maya.is_filled(m - p)) continue;
        std::vector<long> moved;
        int height = 0;
        for (long x : filled) {
            if (x == m) {
                moved.push_back(m - p);
            } else {
                if (x > m - p && x < m) ++height;
                moved.push_back(x);
            }
        }
        result.emplace_back(MayaDiagram(std::move(moved)).to_partition(), height);
    }
    return result;
}

namespace {

std::optional<long> height_path(const Partition& lambda, const Partition& target, int p) {
    if (lambda == target) return 0;
    if (lambda.size() <= target.size()) return std::nullopt;
    for (const auto& [next, height] : remove_border_strips(lambda, p)) {
        if (!next.contains(target)) continue;
        if (auto rest = height_path(next, target, p)) return height + *rest;
    }
    return std::nullopt;
}

}  // namespace

long height_p(const Partition& lambda, const Partition& target, int p) {
    if ((lambda.size() - target.size()) % p != 0)
        throw std::invalid_argument("height_p: size difference not a multiple of p");
    auto height = height_path(lambda, target, p);
    if (!height) throw std::invalid_argument("height_p: target not reachable by strip removal");
    return *height;
}

std::pair<Int, Int> hook_products_split(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("hook_products_split requires p >= 2");
    Int non_p_fold = 1, p_fold = 1;
    for (const auto& row : hook_table(lambda).hooks)
        for (long h : row) (h % p == 0 ? p_fold : non_p_fold) *= h;
    return {non_p_fold, p_fold};
}

}  // namespace whp
