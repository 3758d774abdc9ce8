#pragma once

#include "whp/partition.hpp"

namespace whp {

/*
 * Character of the irreducible S_n representation labelled by lambda, at the
 * conjugacy class of cycle type (p^j, 1^{n-pj}), by two independent methods.
 */

// Signed sum over j-step descent chains in the p-quotient lattice: each
// partition reachable by removing j border strips of size p contributes
// (-1)^{height} times its standard-tableau count, once per chain ending
// there.
Int character_path_sum(const Partition& lambda, int p, long j);

// Classical border-strip (Murnaghan-Nakayama) recursion on the full cycle
// type; shares no code with the path-sum route.
Int character_mn_oracle(const Partition& lambda, int p, long j);

// MN evaluation at an arbitrary cycle type; |cycle_type| must equal |lambda|.
Int character_mn_full(const Partition& lambda, const Partition& cycle_type);

}  // namespace whp
