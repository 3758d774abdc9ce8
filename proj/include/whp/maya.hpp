#pragma once

#include <string>
#include <vector>

#include "whp/partition.hpp"

namespace whp {

/*
 * Maya diagram of a partition: a doubly-infinite 0/1 sequence where every
 * negative position is filled. Only the filled non-negative positions are
 * stored (sorted increasing); the negative tail is implicit.
 *
 * For a partition lambda drawn with shift t >= 0 the filled non-negative
 * positions are { lambda_i + (len+t) - i : 1 <= i <= len+t } with
 * lambda_i = 0 beyond len. The canonical diagram (t = 0) is the unique one
 * whose box at position 0 is empty, unless lambda is empty.
 */
class MayaDiagram {
public:
    MayaDiagram() = default;
    explicit MayaDiagram(std::vector<long> filled_nonneg);

    static MayaDiagram of(const Partition& lambda, long shift = 0);

    const std::vector<long>& filled() const { return filled_; }
    bool is_filled(long position) const;

    // Number of filled non-negative boxes = length(partition) + shift.
    long filled_count() const { return static_cast<long>(filled_.size()); }

    Partition to_partition() const;
    long shift() const;  // filled_count() - length(partition)

    MayaDiagram shifted(long extra) const;  // adds `extra` >= 0 to the shift
    MayaDiagram canonical() const;
    bool equivalent(const MayaDiagram& other) const;

    // Reflect z -> -z-1 and swap filled/empty; yields the conjugate partition.
    MayaDiagram conjugated() const;

    // Dots-and-boxes rendering for debug output.
    std::string render() const;

private:
    std::vector<long> filled_;  // sorted increasing, all >= 0
};

// M^(i) = { m : p*m + i in M } for i = 0..p-1.
std::vector<MayaDiagram> p_modular_decompose(const MayaDiagram& m, int p);

// Inverse of the decomposition: position p*m + i of the result is filled
// exactly when position m of components[i] is.
MayaDiagram p_modular_compose(const std::vector<MayaDiagram>& components);

}  // namespace whp
