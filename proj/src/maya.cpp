#include "whp/maya.hpp"

#include <algorithm>
#include <stdexcept>

namespace whp {

MayaDiagram::MayaDiagram(std::vector<long> filled_nonneg) : filled_(std::move(filled_nonneg)) {
    std::sort(filled_.begin(), filled_.end());
    for (std::size_t i = 0; i < filled_.size(); ++i) {
        if (filled_[i] < 0 || (i > 0 && filled_[i] == filled_[i - 1]))
            throw std::invalid_argument("Maya diagram positions must be distinct and non-negative");
    }
}

MayaDiagram MayaDiagram::of(const Partition& lambda, long shift) {
    if (shift < 0) throw std::invalid_argument("Maya shift must be non-negative");
    const long total = static_cast<long>(lambda.length()) + shift;
    std::vector<long> filled;
    filled.reserve(total);
    for (long i = 1; i <= total; ++i)
        filled.push_back(lambda.part(i - 1) + total - i);
    return MayaDiagram(std::move(filled));
}

bool MayaDiagram::is_filled(long position) const {
    if (position < 0) return true;
    return std::binary_search(filled_.begin(), filled_.end(), position);
}

Partition MayaDiagram::to_partition() const {
    const long total = filled_count();
    std::vector<long> parts;
    parts.reserve(total);
    // i-th largest filled position m gives part m - (total - 1 - i).
    for (long i = 0; i < total; ++i) {
        const long m = filled_[total - 1 - i];
        const long part = m - (total - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

long MayaDiagram::shift() const {
    return filled_count() - static_cast<long>(to_partition().length());
}

MayaDiagram MayaDiagram::shifted(long extra) const {
    if (extra < 0) throw std::invalid_argument("Maya shift must be non-negative");
    std::vector<long> filled;
    filled.reserve(filled_.size() + extra);
    for (long i = 0; i < extra; ++i) filled.push_back(i);
    for (long m : filled_) filled.push_back(m + extra);
    return MayaDiagram(std::move(filled));
}

MayaDiagram MayaDiagram::canonical() const { return of(to_partition()); }

bool MayaDiagram::equivalent(const MayaDiagram& other) const {
    return to_partition() == other.to_partition();
}

MayaDiagram MayaDiagram::conjugated() const {
    // Empty positions of M in [0, top] become filled positions of the
    // reflection z -> -z-1 after re-anchoring at the first empty box.
    const long top = filled_.empty() ? 0 : filled_.back() + 1;
    std::vector<long> gaps;
    for (long z = 0; z <= top; ++z)
        if (!is_filled(z)) gaps.push_back(z);
    // Reflected filled positions are top - z for each empty z; re-sorting
    // gives a valid diagram whose partition is the conjugate.
    std::vector<long> filled;
    for (long z : gaps) filled.push_back(top - z);
    return MayaDiagram(std::move(filled));
}

std::string MayaDiagram::render() const {
    const long top = filled_.empty() ? 4 : filled_.back() + 2;
    std::string out = "...|";
    for (long z = 0; z <= top; ++z) out += is_filled(z) ? "[*]" : "[ ]";
    out += "...";
    return out;
}

std::vector<MayaDiagram> p_modular_decompose(const MayaDiagram& m, int p) {
    if (p < 1) throw std::invalid_argument("p-modular decomposition requires p >= 1");
    std::vector<std::vector<long>> parts(p);
    for (long position : m.filled()) parts[position % p].push_back(position / p);
    std::vector<MayaDiagram> out;
    out.reserve(p);
    for (auto& filled : parts) out.emplace_back(std::move(filled));
    return out;
}

MayaDiagram p_modular_compose(const std::vector<MayaDiagram>& components) {
    const int p = static_cast<int>(components.size());
    if (p < 1) throw std::invalid_argument("p-modular composition requires at least one component");
    std::vector<long> filled;
    for (int i = 0; i < p; ++i)
        for (long m : components[i].filled()) filled.push_back(p * m + i);
    return MayaDiagram(std::move(filled));
}

}  // namespace whp
