#include "centra/chain_length.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "centra/arith.hpp"
#include "centra/errors.hpp"
#include "centra/homomorphism.hpp"
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

// Index-space view of one whole group: all products resolved through a
// multiplication table so the lattice walk never touches permutations.
class IndexedGroup {
public:
  IndexedGroup(const Group& g, const Caps& caps) {
    const auto& elems = g.elements(caps);
    n_ = static_cast<uint32_t>(elems.size());
    table_.assign(static_cast<size_t>(n_) * n_, 0);
    std::unordered_map<Permutation, uint32_t, PermHash> where;
    where.reserve(n_);
    for (uint32_t i = 0; i < n_; ++i) where.emplace(elems[i], i);
    for (uint32_t i = 0; i < n_; ++i)
      for (uint32_t j = 0; j < n_; ++j)
        table_[static_cast<size_t>(i) * n_ + j] = where.at(elems[i] * elems[j]);
    identity_ = where.at(g.identity());
  }

  uint32_t size() const { return n_; }
  uint32_t identity() const { return identity_; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return table_[static_cast<size_t>(a) * n_ + b];
  }

  // Subgroup generated by the seed set closed under the given generators,
  // as a sorted index list.  Seeds must include the identity.
  std::vector<uint32_t> close(const std::vector<uint32_t>& seeds,
                              const std::vector<uint32_t>& gens) const {
    std::vector<char> in(n_, 0);
    std::vector<uint32_t> list = seeds;
    for (uint32_t s : seeds) in[s] = 1;
    for (size_t pos = 0; pos < list.size(); ++pos)
      for (uint32_t s : gens) {
        uint32_t t = mul(list[pos], s);
        if (!in[t]) {
          in[t] = 1;
          list.push_back(t);
        }
      }
    std::sort(list.begin(), list.end());
    return list;
  }

private:
  uint32_t n_ = 0;
  uint32_t identity_ = 0;
  std::vector<uint32_t> table_;
};

class ChainSearch {
public:
  explicit ChainSearch(const IndexedGroup& ix) : ix_(ix) {}

  uint64_t run() {
    std::vector<uint32_t> bottom{ix_.identity()};
    return longest_above(bottom, {});
  }

private:
  // Longest chain from H (sorted index list, generated by gens) up to the
  // whole group, counted in strict inclusions.
  uint64_t longest_above(const std::vector<uint32_t>& h,
                         const std::vector<uint32_t>& gens) {
    if (h.size() == ix_.size()) return 0;
    auto hit = memo_.find(h);
    if (hit != memo_.end()) return hit->second;

    // Candidate overgroups <H, g>, one g per (H, H) double coset.
    std::vector<char> seen(ix_.size(), 0);
    for (uint32_t x : h) seen[x] = 1;
    std::vector<std::vector<uint32_t>> closures;
    std::vector<std::vector<uint32_t>> closure_gens;
    std::unordered_map<std::vector<uint32_t>, size_t, FingerprintHash> dedup;
    for (uint32_t g = 0; g < ix_.size(); ++g) {
      if (seen[g]) continue;
      std::vector<uint32_t> ext_gens = gens;
      ext_gens.push_back(g);
      std::vector<uint32_t> k = ix_.close(h, ext_gens);
      if (dedup.try_emplace(k, closures.size()).second) {
        closures.push_back(std::move(k));
        closure_gens.push_back(std::move(ext_gens));
      }
      // Mark the double coset HgH: every member generates the same closure.
      std::vector<uint32_t> coset{g};
      seen[g] = 1;
      for (size_t pos = 0; pos < coset.size(); ++pos)
        for (uint32_t s : gens) {
          for (uint32_t t : {ix_.mul(s, coset[pos]), ix_.mul(coset[pos], s)}) {
            if (!seen[t]) {
              seen[t] = 1;
              coset.push_back(t);
            }
          }
        }
    }

    // Keep the inclusion-minimal closures; only they can be lattice covers.
    std::vector<size_t> order(closures.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return closures[a].size() < closures[b].size();
    });
    std::vector<size_t> minimal;
    for (size_t c : order) {
      bool dominated = false;
      for (size_t m : minimal)
        if (closures[m].size() < closures[c].size() &&
            kernels::subset_sorted(closures[m], closures[c])) {
          dominated = true;
          break;
        }
      if (!dominated) minimal.push_back(c);
    }

    uint64_t best = 0;
    for (size_t m : minimal)
      best = std::max(best, 1 + longest_above(closures[m], closure_gens[m]));
    memo_.emplace(h, best);
    return best;
  }

  const IndexedGroup& ix_;
  std::unordered_map<std::vector<uint32_t>, uint64_t, FingerprintHash> memo_;
};

}  // namespace

uint64_t chain_length_exact(const Group& g, const Caps& caps) {
  if (g.order() > caps.chain_exact)
    throw CapError("group order exceeds the exact chain-length cap");
  if (g.is_trivial()) return 0;
  IndexedGroup ix(g, caps);
  ChainSearch search(ix);
  return search.run();
}

uint64_t subgroup_chain_length(const Group& g, const Caps& caps) {
  if (g.is_trivial()) return 0;
  if (is_soluble(g)) return big_omega(g.order());
  SubgroupRef r = soluble_radical(g, caps);
  if (!r.is_trivial()) {
    Quotient q = quotient(g, r.group(), caps);
    return big_omega(r.order()) + subgroup_chain_length(q.group, caps);
  }
  std::vector<SubgroupRef> minimals = minimal_normal_subgroups(g, caps);
  const SubgroupRef& m = minimals.front();
  if (m.order() == g.order()) return chain_length_exact(g, caps);  // simple
  uint64_t below = subgroup_chain_length(m.group(), caps);
  Quotient q = quotient(g, m.group(), caps);
  return below + subgroup_chain_length(q.group, caps);
}

}  // namespace centra
