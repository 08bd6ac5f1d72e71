#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "centra/permutation.hpp"

namespace centra {

// Base and strong generating set for a permutation group, built by
// Schreier-Sims with a seeded randomized sifting pre-pass followed by a
// deterministic closure pass over all Schreier generators.  The closure pass
// certifies the chain, so order() and contains() are exact; the fixed seed
// keeps construction reproducible.
//
// Base points are chosen on demand as the highest-priority point moved by the
// current level's generators.  The default priority is "smallest point
// first"; homomorphism plumbing passes a custom priority to force base points
// into one block of a product action.
//
// A prescribed base forces the first levels to sit on exactly those points in
// that order, even when their orbits stay trivial.  This pins down the level
// index at which a block of points becomes pointwise stabilized, which the
// kernel computation relies on.
class StabilizerChain {
public:
  StabilizerChain(uint32_t degree, const std::vector<Permutation>& generators,
                  std::vector<uint32_t> point_priority = {},
                  const std::vector<uint32_t>& prescribed_base = {});

  uint32_t degree() const { return degree_; }
  uint64_t order() const { return order_; }
  bool contains(const Permutation& p) const;

  size_t depth() const { return levels_.size(); }
  uint32_t base_point(size_t level) const { return levels_[level].beta; }
  // Generators of the level-th group in the chain (level 0 = whole group).
  const std::vector<Permutation>& level_generators(size_t level) const {
    return levels_[level].gens;
  }
  size_t orbit_size(size_t level) const { return levels_[level].orbit.size(); }
  // Orbit members in BFS order; orbit_point(level, 0) == base_point(level).
  uint32_t orbit_point(size_t level, size_t i) const { return levels_[level].orbit[i]; }

  // Coset representative u with u[beta] = point, or throws if the point is
  // outside the level's orbit.
  Permutation coset_rep(size_t level, uint32_t point) const;
  bool in_orbit(size_t level, uint32_t point) const {
    return levels_[level].pos[point] >= 0;
  }

  // Strips p through the chain starting at `level`; returns the residue and
  // the level at which stripping stopped (depth() when fully stripped).
  // p is a member iff the residue is the identity and stop == depth().
  std::pair<Permutation, size_t> strip(const Permutation& p, size_t level = 0) const;

  // Adds a new group element as a generator (no-op if already a member) and
  // re-closes the chain.  Used by closure algorithms that grow a subgroup.
  void insert_generator(const Permutation& p);

  // Visits every group element exactly once (products of transversal
  // representatives).  Visit order is deterministic but not sorted.
  void for_each_element(const std::function<void(const Permutation&)>& fn) const;

private:
  struct Level {
    uint32_t beta = 0;
    std::vector<Permutation> gens;
    std::vector<int32_t> pos;       // point -> index into orbit, or -1
    std::vector<uint32_t> orbit;    // BFS order; orbit[0] == beta
    // Transversal; explicit perms when small, otherwise a Schreier tree of
    // (parent orbit index, generator index) pairs with reps built on demand.
    bool lazy = false;
    std::vector<Permutation> transversal;
    std::vector<std::pair<int32_t, int32_t>> tree;
  };

  void add_level(uint32_t beta);
  void rebuild_orbit(size_t level);
  // Appends p as a strong generator at levels at_level..deepest affected and
  // refreshes the orbits above it.
  void add_strong_generator(size_t at_level, const Permutation& p);
  void deterministic_closure();
  void recompute_order();
  uint32_t pick_base_point(const Permutation& moved) const;

  uint32_t degree_;
  std::vector<uint32_t> priority_;  // rank per point; lower rank preferred
  std::vector<Level> levels_;
  uint64_t order_ = 1;
};

}  // namespace centra
