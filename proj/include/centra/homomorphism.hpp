#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "centra/caps.hpp"
#include "centra/group.hpp"
#include "centra/permutation.hpp"

namespace centra {

// Homomorphism between permutation groups, defined by images of the domain's
// generators.  Internally the map is stored as the subgroup of the combined
// action on domain-points followed by codomain-points generated by the pairs
// (s_i, images[i]); a stabilizer chain whose base runs through the domain
// block first evaluates the map, and a second chain whose base runs through
// the codomain block first yields the kernel and preimages.
//
// Construction verifies that the generator assignment extends to a
// homomorphism (the pair subgroup has the same order as the domain) and
// throws std::invalid_argument otherwise.
//
// The kernel-side chain carries one level per codomain point, so kernel()
// and preimage() cost O(codomain degree * combined degree) memory; keep the
// codomain degree modest when those are needed.
class Homomorphism {
public:
  Homomorphism(Group domain, Group codomain, std::vector<Permutation> images);

  const Group& domain() const;
  const Group& codomain() const;
  const std::vector<Permutation>& generator_images() const;

  // Image of g; throws std::invalid_argument when g is not in the domain.
  Permutation apply(const Permutation& g) const;

  bool in_image(const Permutation& q) const;
  // Some preimage of q; throws std::invalid_argument when q is not hit.
  Permutation preimage(const Permutation& q) const;

  // Subgroup of the codomain generated by the generator images.
  Group image() const;
  const Group& kernel() const;

  static Homomorphism identity(const Group& g);

private:
  struct Data;
  std::shared_ptr<Data> data_;
};

// True when every generator of n lies in g and n is closed under conjugation
// by g's generators.
bool is_normal_subgroup(const Group& g, const Group& n);

// Action of g on the right cosets of a normal subgroup n, with the natural
// projection onto it.  Coset 0 is n itself; the remaining cosets are numbered
// in search order over the generators.  Throws CapError when the index
// exceeds caps.quotient_index and std::invalid_argument when n is not normal.
struct Quotient {
  Group group;
  Homomorphism projection;
};
Quotient quotient(const Group& g, const Group& n, const Caps& caps = default_caps());

}  // namespace centra
