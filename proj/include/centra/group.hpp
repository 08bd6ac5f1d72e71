#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "centra/caps.hpp"
#include "centra/permutation.hpp"
#include "centra/stabilizer_chain.hpp"

namespace centra {

// Immutable handle to a finite permutation group given by generators.
// Copies share state; the stabilizer chain, the sorted element list and the
// element index are built lazily under a lock and never change afterwards,
// so handles may be shared across threads once constructed.
class Group {
public:
  // The trivial group of the given degree.
  explicit Group(uint32_t degree);
  Group(uint32_t degree, std::vector<Permutation> generators);

  uint32_t degree() const;
  const std::vector<Permutation>& generators() const;
  Permutation identity() const { return Permutation::identity(degree()); }

  uint64_t order() const;
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  const StabilizerChain& chain() const;

  // All elements, sorted by image table (lexicographic), so element indices
  // are reproducible.  Throws CapError if the order exceeds caps.enumeration.
  const std::vector<Permutation>& elements(const Caps& caps = default_caps()) const;
  // Index of p in elements(); throws std::invalid_argument for non-members.
  uint32_t element_index(const Permutation& p, const Caps& caps = default_caps()) const;

  struct ConjugacyClass {
    uint32_t rep_index;   // index into elements()
    uint64_t size;
  };
  // One class per entry, ordered by smallest member index (so the identity's
  // class comes first).  The representative is the smallest-index member.
  const std::vector<ConjugacyClass>& conjugacy_classes(const Caps& caps = default_caps()) const;
  std::vector<Permutation> conjugacy_class_reps(const Caps& caps = default_caps()) const;

  // Identity of the shared state; true iff both handles point at the same
  // underlying object (not a mathematical equality test).
  bool same_handle(const Group& other) const { return data_ == other.data_; }

private:
  struct Data;
  std::shared_ptr<Data> data_;
};

// Smallest generating subsequence of `candidates` (greedy, in the given
// order) for the group they generate; used to keep derived subgroups small.
std::vector<Permutation> reduce_generators(uint32_t degree,
                                           const std::vector<Permutation>& candidates);

// A subgroup of an ambient group, remembered with its own generators.  The
// handle for the subgroup itself is built eagerly (same degree).
class SubgroupRef {
public:
  SubgroupRef(Group ambient, std::vector<Permutation> generators);

  const Group& ambient() const { return ambient_; }
  const Group& group() const { return sub_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  uint64_t order() const { return sub_.order(); }
  uint64_t index() const { return ambient_.order() / sub_.order(); }
  bool is_trivial() const { return sub_.is_trivial(); }

  bool contains(const Permutation& p) const { return sub_.contains(p); }
  // Order equality plus mutual generator membership; generating sets and
  // construction history are ignored.
  bool same_subgroup(const SubgroupRef& other) const;
  bool contains_subgroup(const SubgroupRef& other) const;

  static SubgroupRef whole(const Group& g) { return SubgroupRef(g, g.generators()); }
  static SubgroupRef trivial(const Group& g) { return SubgroupRef(g, {}); }

private:
  Group ambient_;
  std::vector<Permutation> gens_;
  Group sub_;
};

Group direct_product(const Group& a, const Group& b);

// Generator-image backtracking isomorphism test for groups of order at most
// caps.iso_order; throws CapError above that.
bool is_isomorphic_small(const Group& a, const Group& b,
                         const Caps& caps = default_caps());

}  // namespace centra
