#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "centra/caps.hpp"
#include "centra/group.hpp"
#include "centra/permutation.hpp"

namespace centra {

// Centralizer C_G(targets).  Dispatches to the element filter when the group
// fits under caps.filter_order and to a backtrack search over the stabilizer
// chain above that; both variants stay callable for cross-checking.
SubgroupRef centralizer(const Group& g, const std::vector<Permutation>& targets,
                        const Caps& caps = default_caps());
SubgroupRef centralizer_filter(const Group& g, const std::vector<Permutation>& targets,
                               const Caps& caps = default_caps());
SubgroupRef centralizer_backtrack(const Group& g, const std::vector<Permutation>& targets);

// Center Z(G) = C_G(generators).
Group center(const Group& g, const Caps& caps = default_caps());

// Normalizer N_G(H); same filter/backtrack split as centralizer.
SubgroupRef normalizer(const Group& g, const SubgroupRef& h,
                       const Caps& caps = default_caps());
SubgroupRef normalizer_filter(const Group& g, const SubgroupRef& h,
                              const Caps& caps = default_caps());
SubgroupRef normalizer_backtrack(const Group& g, const SubgroupRef& h);

// Smallest normal subgroup of g containing the seeds.
SubgroupRef normal_closure(const Group& g, const std::vector<Permutation>& seeds);

// Commutator subgroup [g, g] (normal closure of generator commutators).
Group derived_subgroup(const Group& g);

enum class SeriesKind { Derived, UpperFitting, PSeries };
struct SeriesRecord {
  SeriesKind kind;
  std::vector<SubgroupRef> terms;  // strictly nested; stabilized tail removed
};

// Descending series G ≥ G' ≥ G'' ≥ …, first term G, truncated at
// stabilization.
SeriesRecord derived_series(const Group& g);
// Number of strict steps to reach the trivial group, or nothing when the
// series stabilizes above it.
std::optional<int> derived_length(const Group& g);
bool is_soluble(const Group& g);
bool is_perfect(const Group& g);
// Terminal term of the derived series.
Group perfect_core(const Group& g);

// Nontrivial and without proper nontrivial normal subgroups.
bool is_simple(const Group& g, const Caps& caps = default_caps());

// One Sylow p-subgroup (deterministic: grown through normalizers by the
// ascending-element rule).  Requires element enumeration under caps.
SubgroupRef sylow(const Group& g, uint64_t p, const Caps& caps = default_caps());

// O_p(G): intersection of all conjugates of one Sylow p-subgroup.
SubgroupRef p_core(const Group& g, uint64_t p, const Caps& caps = default_caps());

// O_{p'}(G): largest normal subgroup of order prime to p (join of the normal
// closures of class representatives whose closure has p-free order).
SubgroupRef p_prime_core(const Group& g, uint64_t p, const Caps& caps = default_caps());

// Fitting subgroup F(G) = product of the p-cores.
SubgroupRef fitting(const Group& g, const Caps& caps = default_caps());

// F_i(G): F_1 = F(G), F_{j+1} = preimage of F(G/F_j).
SubgroupRef upper_fitting_series(const Group& g, int i, const Caps& caps = default_caps());

// Largest normal soluble subgroup, by iterating the Fitting lift.
SubgroupRef soluble_radical(const Group& g, const Caps& caps = default_caps());

// Largest normal p-soluble subgroup: terminal term of the alternating series
// 1 ≤ O_{p'} ≤ O_{p',p} ≤ O_{p',p,p'} ≤ …
SubgroupRef p_soluble_radical(const Group& g, uint64_t p,
                              const Caps& caps = default_caps());

// The inclusion-minimal nontrivial normal subgroups; g must be nontrivial.
std::vector<SubgroupRef> minimal_normal_subgroups(const Group& g,
                                                  const Caps& caps = default_caps());
// Product of the minimal normal subgroups.
SubgroupRef socle(const Group& g, const Caps& caps = default_caps());

// A ∩ B for subgroups of a common symmetric group, by enumerating the
// smaller one.
Group intersect_subgroups(const Group& a, const Group& b,
                          const Caps& caps = default_caps());

}  // namespace centra
