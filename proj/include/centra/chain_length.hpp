#pragma once

#include <cstdint>

#include "centra/caps.hpp"
#include "centra/group.hpp"

namespace centra {

// l(G): the number of strict inclusions in a longest chain of subgroups
// 1 = H_0 < H_1 < … < H_m = G.  Soluble groups use the Ω(|G|) shortcut (a
// composition series attains it and Lagrange caps every chain there).
// Otherwise l splits exactly along any normal subgroup, l(G) = l(N) + l(G/N),
// so the computation reduces to the nonabelian simple composition factors,
// each resolved by the exact search below.  Throws CapError when such a
// factor exceeds caps.chain_exact.
uint64_t subgroup_chain_length(const Group& g, const Caps& caps = default_caps());

// Exact longest-chain search: walks the subgroup lattice upward from the
// trivial subgroup through inclusion-minimal overgroups (the lattice cover
// steps), memoized on element-set fingerprints.  Requires
// |g| ≤ caps.chain_exact.
uint64_t chain_length_exact(const Group& g, const Caps& caps = default_caps());

}  // namespace centra
