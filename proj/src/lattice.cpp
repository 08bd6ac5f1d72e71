#include "centra/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "centra/errors.hpp"
#include "centra/kernels.hpp"
#include "centra/subgroup_ops.hpp"

namespace centra {

namespace {

struct FingerprintHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

CentralizerLattice::CentralizerLattice(const Group& g, const Caps& caps)
    : ambient_(g), caps_(caps) {
  const auto& elems = ambient_.elements(caps_);
  const uint32_t n = static_cast<uint32_t>(elems.size());
  element_rows_ = kernels::centralizer_table(elems);

  std::unordered_map<std::vector<uint32_t>, uint32_t, FingerprintHash> index;
  std::vector<uint32_t> all(n);
  for (uint32_t i = 0; i < n; ++i) all[i] = i;
  nodes_.push_back({std::move(all), {}});
  index.emplace(nodes_[0].elems, 0);

  // Seed with the distinct element centralizers; each remembers the first
  // element that defines it.
  std::vector<uint32_t> seeds;  // node index -> defining element of the seed
  std::vector<uint32_t> seed_nodes;
  for (uint32_t x = 0; x < n; ++x) {
    auto [it, fresh] = index.try_emplace(element_rows_[x],
                                         static_cast<uint32_t>(nodes_.size()));
    if (!fresh) continue;
    nodes_.push_back({element_rows_[x], {x}});
    seeds.push_back(x);
    seed_nodes.push_back(it->second);
  }

  // Meet-closure: every node is a meet of element centralizers, so closing
  // under "intersect with one seed" reaches everything.
  for (size_t qi = 0; qi < nodes_.size(); ++qi) {
    for (size_t si = 0; si < seeds.size(); ++si) {
      std::vector<uint32_t> meet =
          kernels::intersect_sorted(nodes_[qi].elems, nodes_[seed_nodes[si]].elems);
      if (meet.size() == nodes_[qi].elems.size()) continue;  // qi ⊆ seed
      auto [it, fresh] = index.try_emplace(meet, static_cast<uint32_t>(nodes_.size()));
      if (!fresh) continue;
      if (nodes_.size() >= caps_.lattice_nodes)
        throw CapError("centralizer lattice exceeds the node cap");
      Node child;
      child.elems = std::move(meet);
      child.defining = nodes_[qi].defining;
      child.defining.push_back(seeds[si]);
      nodes_.push_back(std::move(child));
    }
  }

  // Covers.  Nodes in size-ascending order; candidate inclusions must have
  // dividing orders (Lagrange) and pass the subset test; a contained node is
  // a cover unless it sits inside a larger contained node.
  std::vector<uint32_t> by_size(nodes_.size());
  for (uint32_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
  std::sort(by_size.begin(), by_size.end(), [&](uint32_t a, uint32_t b) {
    if (nodes_[a].elems.size() != nodes_[b].elems.size())
      return nodes_[a].elems.size() < nodes_[b].elems.size();
    return a < b;
  });
  for (size_t ui = 0; ui < by_size.size(); ++ui) {
    uint32_t upper = by_size[ui];
    size_t usz = nodes_[upper].elems.size();
    std::vector<uint32_t> subs;  // size-descending by construction
    for (size_t li = ui; li-- > 0;) {
      uint32_t lower = by_size[li];
      size_t lsz = nodes_[lower].elems.size();
      if (lsz == usz || usz % lsz != 0) continue;
      if (kernels::subset_sorted(nodes_[lower].elems, nodes_[upper].elems))
        subs.push_back(lower);
    }
    for (size_t a = 0; a < subs.size(); ++a) {
      bool covered = true;
      for (size_t b = 0; b < a; ++b)
        if (nodes_[subs[a]].elems.size() < nodes_[subs[b]].elems.size() &&
            kernels::subset_sorted(nodes_[subs[a]].elems, nodes_[subs[b]].elems)) {
          covered = false;
          break;
        }
      if (covered) covers_.emplace_back(subs[a], upper);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

SubgroupRef CentralizerLattice::node(size_t i) const {
  if (i == 0) return SubgroupRef::whole(ambient_);
  const auto& elems = ambient_.elements(caps_);
  std::vector<Permutation> members;
  members.reserve(nodes_[i].elems.size());
  for (uint32_t x : nodes_[i].elems) members.push_back(elems[x]);
  return SubgroupRef(ambient_, reduce_generators(ambient_.degree(), members));
}

CdimResult cdim(const Group& g, const Caps& caps) {
  CentralizerLattice lat(g, caps);
  const size_t n = lat.node_count();

  // Chain depth from the top, over covers, visiting uppers before lowers.
  std::vector<uint32_t> by_size_desc(n);
  for (uint32_t i = 0; i < n; ++i) by_size_desc[i] = i;
  std::sort(by_size_desc.begin(), by_size_desc.end(), [&](uint32_t a, uint32_t b) {
    if (lat.node_order(a) != lat.node_order(b))
      return lat.node_order(a) > lat.node_order(b);
    return a < b;
  });
  std::vector<std::vector<uint32_t>> lowers_of(n);
  for (const auto& [lo, up] : lat.covers()) lowers_of[up].push_back(lo);

  std::vector<int> depth(n, 0);
  std::vector<int32_t> par(n, -1);
  depth[lat.top()] = 1;
  for (uint32_t up : by_size_desc) {
    if (depth[up] == 0) continue;
    for (uint32_t lo : lowers_of[up])
      if (depth[up] + 1 > depth[lo]) {
        depth[lo] = depth[up] + 1;
        par[lo] = static_cast<int32_t>(up);
      }
  }

  uint32_t best = lat.top();
  for (uint32_t i = 0; i < n; ++i) {
    if (depth[i] > depth[best] ||
        (depth[i] == depth[best] && lat.node_order(i) < lat.node_order(best)) ||
        (depth[i] == depth[best] && lat.node_order(i) == lat.node_order(best) &&
         i < best))
      best = i;
  }

  std::vector<uint32_t> path;  // top .. best
  for (int32_t v = static_cast<int32_t>(best); v >= 0; v = par[v])
    path.push_back(static_cast<uint32_t>(v));
  std::reverse(path.begin(), path.end());

  CdimResult r;
  r.value_terms = depth[best];
  r.value_steps = depth[best] - 1;
  const auto& elems = g.elements(caps);
  for (size_t s = 0; s + 1 < path.size(); ++s) {
    const auto& parent = lat.node_elements(path[s]);
    const auto& child = lat.node_elements(path[s + 1]);
    std::vector<uint32_t> candidates = lat.defining_set(path[s + 1]);
    std::sort(candidates.begin(), candidates.end());
    bool found = false;
    for (uint32_t y : candidates) {
      if (kernels::intersect_sorted(parent, lat.element_centralizer(y)) == child) {
        r.witnesses.push_back(elems[y]);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no defining element separates a cover step");
  }
  for (uint32_t v : path) r.chain.push_back(lat.node(v));
  return r;
}

bool verify_witnesses(const Group& g, const CdimResult& r, const Caps& caps) {
  if (r.chain.empty() || r.value_terms != static_cast<int>(r.chain.size()) ||
      r.value_steps != r.value_terms - 1 ||
      r.witnesses.size() + 1 != r.chain.size())
    throw std::invalid_argument("malformed chain result");
  if (r.chain.front().order() != g.order())
    throw std::invalid_argument("chain does not start at the whole group");

  // (a) the chain really is the cumulative-centralizer chain of the
  // witnesses, strictly descending.
  std::vector<Permutation> prefix;
  for (size_t i = 0; i + 1 < r.chain.size(); ++i) {
    prefix.push_back(r.witnesses[i]);
    SubgroupRef c = centralizer(g, prefix, caps);
    if (!c.same_subgroup(r.chain[i + 1])) return false;
    if (c.order() >= r.chain[i].order()) return false;
  }

  // (b) the witnesses plus one separating element per step generate a
  // subgroup with the same number of chain terms.
  std::vector<Permutation> gens = r.witnesses;
  for (size_t i = 0; i + 1 < r.chain.size(); ++i) {
    const Group& upper = r.chain[i].group();
    const SubgroupRef& lower = r.chain[i + 1];
    bool found = false;
    for (const Permutation& h : upper.elements(caps))
      if (!lower.contains(h)) {
        gens.push_back(h);
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("chain step is not strict");
  }
  Group h(g.degree(), reduce_generators(g.degree(), gens));
  return cdim(h, caps).value_terms == r.value_terms;
}

}  // namespace centra
