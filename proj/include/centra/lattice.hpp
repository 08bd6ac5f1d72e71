#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "centra/caps.hpp"
#include "centra/group.hpp"
#include "centra/permutation.hpp"

namespace centra {

// The meet-closure of the element centralizers {C_G(x) : x ∈ G} together
// with G itself.  Every node is C_G(S) for a stored defining set S of
// element indices, so membership of a node in the family is certifiable.
// Nodes are deduplicated by their sorted element-index fingerprints and the
// whole construction is deterministic.
class CentralizerLattice {
public:
  explicit CentralizerLattice(const Group& g, const Caps& caps = default_caps());

  const Group& ambient() const { return ambient_; }
  size_t node_count() const { return nodes_.size(); }
  size_t top() const { return 0; }  // index of the node G = C_G(∅)

  // Sorted indices into ambient().elements() of the node's members.
  const std::vector<uint32_t>& node_elements(size_t i) const {
    return nodes_[i].elems;
  }
  // Element indices S with node i == C_G(S); empty exactly for the top node.
  const std::vector<uint32_t>& defining_set(size_t i) const {
    return nodes_[i].defining;
  }
  uint64_t node_order(size_t i) const { return nodes_[i].elems.size(); }
  SubgroupRef node(size_t i) const;

  // Strict-inclusion cover pairs (lower, upper): lower ⊂ upper with no node
  // strictly between.
  const std::vector<std::pair<uint32_t, uint32_t>>& covers() const {
    return covers_;
  }

  // Fingerprint of C_G(x) for the element with index x, sorted.
  const std::vector<uint32_t>& element_centralizer(uint32_t x) const {
    return element_rows_[x];
  }

private:
  struct Node {
    std::vector<uint32_t> elems;
    std::vector<uint32_t> defining;
  };

  Group ambient_;
  Caps caps_;
  std::vector<Node> nodes_;
  std::vector<std::vector<uint32_t>> element_rows_;  // C(x) fingerprint per x
  std::vector<std::pair<uint32_t, uint32_t>> covers_;
};

// A longest strict chain of centralizers G = chain[0] > chain[1] > … and the
// elements realizing it: chain[i] = C_G({witnesses[0..i-1]}).
struct CdimResult {
  int value_terms = 0;  // subgroups in the chain (primary convention)
  int value_steps = 0;  // strict inclusions: value_terms - 1
  std::vector<Permutation> witnesses;
  std::vector<SubgroupRef> chain;
};

// Longest-chain search over the centralizer lattice, by dynamic programming
// on the cover DAG.  Deterministic, including the witness choices.
CdimResult cdim(const Group& g, const Caps& caps = default_caps());

// Recomputes chain[i] = C_G(witnesses 1..i) from scratch, checks strict
// descent, and checks that the subgroup generated by the witnesses plus one
// separating element per step attains the same number of chain terms.
// Throws std::invalid_argument on a structurally malformed result.
bool verify_witnesses(const Group& g, const CdimResult& r,
                      const Caps& caps = default_caps());

}  // namespace centra
