#pragma once

#include <vector>

#include "centra/caps.hpp"
#include "centra/group.hpp"

namespace centra {

// The components of a group: its subnormal quasisimple subgroups.  They
// commute pairwise and generate the layer E(G).
struct ComponentSet {
  Group ambient;
  std::vector<SubgroupRef> components;
  SubgroupRef layer;
};

// Perfect with simple central quotient.
bool is_quasisimple(const Group& g, const Caps& caps = default_caps());

// All components, found through C_G(R):  with R the soluble radical and
// C = C_G(R), every component lies in C and maps onto a simple factor of the
// socle of C / (C ∩ R); the component is recovered as the perfect core of
// the preimage of such a factor.
ComponentSet components(const Group& g, const Caps& caps = default_caps());

// F*(G) = ⟨F(G), E(G)⟩.
SubgroupRef generalized_fitting(const Group& g, const Caps& caps = default_caps());

// The conjugation image of N_G(H) on the element set of H: a faithful
// permutation representation of N_G(H)/C_G(H), one point per element of H.
Group induced_automorphisms(const Group& g, const SubgroupRef& h,
                            const Caps& caps = default_caps());

}  // namespace centra
