#pragma once

// Brute-force reference implementations used only by tests.  Everything here
// is written to be obviously correct and independent of the library's
// algorithmic paths (stabilizer chains, lattice DP, component extraction),
// so a disagreement always points at the production code.

#include <cstdint>
#include <vector>

#include "centra/group.hpp"
#include "centra/permutation.hpp"

namespace centra::oracles {

// Closure of {identity} ∪ gens under products, by worklist; sorted.
std::vector<Permutation> bfs_closure(uint32_t degree,
                                     const std::vector<Permutation>& gens,
                                     size_t limit = 1u << 20);

// Longest chain (node count) in a DAG given by strict-inclusion edges,
// by exhaustive depth-first search over all descending paths.
// adjacency[i] lists nodes strictly below node i.
size_t longest_path_nodes_dfs(const std::vector<std::vector<uint32_t>>& below);

// All subgroups of g that are quasisimple and subnormal, found by recursive
// descent through the full normal-subgroup lattice.  Each result is the
// sorted element list of one such subgroup.  Order must be at most `limit`.
std::vector<std::vector<Permutation>> subnormal_quasisimple(const Group& g,
                                                            uint64_t limit = 2000);

// All normal subgroups of g, as sorted element lists (join closure of the
// conjugacy-class normal closures).
std::vector<std::vector<Permutation>> all_normal_subgroups(const Group& g);

// Is the closed element set a nonabelian simple group?  Tests that every
// nontrivial element has full normal closure.
bool is_simple_brute(const std::vector<Permutation>& elems, uint32_t degree);

// Composition factor orders computed by a maximal-normal-subgroup-first
// refinement; returns the sorted multiset of factor orders.
std::vector<uint64_t> composition_factor_orders_topdown(const Group& g);

}  // namespace centra::oracles
