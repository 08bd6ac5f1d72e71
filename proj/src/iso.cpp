#include <algorithm>
#include <cstdint>
#include <vector>

#include "centra/errors.hpp"
#include "centra/group.hpp"

namespace centra {

namespace {

// Index-space view of a small group: multiplication table plus a per-element
// invariant (order, conjugacy class size) used to prune image candidates.
struct SmallTable {
  uint32_t n = 0;
  uint32_t id = 0;
  std::vector<uint32_t> mult;  // n * n
  std::vector<std::pair<uint64_t, uint64_t>> profile;

  uint32_t at(uint32_t i, uint32_t j) const { return mult[i * n + j]; }

  explicit SmallTable(const Group& g, const Caps& caps) {
    const auto& elems = g.elements(caps);
    n = static_cast<uint32_t>(elems.size());
    mult.resize(static_cast<size_t>(n) * n);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j)
        mult[i * n + j] = g.element_index(elems[i] * elems[j], caps);
    for (uint32_t i = 0; i < n; ++i)
      if (elems[i].is_identity()) id = i;

    std::vector<uint64_t> class_size(n, 0);
    std::vector<int32_t> class_of(n, -1);
    std::vector<uint32_t> stack;
    for (uint32_t i = 0; i < n; ++i) {
      if (class_of[i] >= 0) continue;
      stack.assign(1, i);
      class_of[i] = static_cast<int32_t>(i);
      std::vector<uint32_t> members;
      while (!stack.empty()) {
        uint32_t x = stack.back();
        stack.pop_back();
        members.push_back(x);
        for (const Permutation& s : g.generators()) {
          uint32_t y = g.element_index(elems[x].conjugated_by(s), caps);
          if (class_of[y] < 0) {
            class_of[y] = static_cast<int32_t>(i);
            stack.push_back(y);
          }
        }
      }
      for (uint32_t m : members) class_size[m] = members.size();
    }
    profile.resize(n);
    for (uint32_t i = 0; i < n; ++i) profile[i] = {elems[i].order(), class_size[i]};
  }
};

// Extends the partial map a->b defined on generator pairs to the subgroup the
// assigned generators span, checking every product relation along the way.
// Returns the number of mapped elements, or 0 on conflict.
uint32_t close_partial_map(const SmallTable& A, const SmallTable& B,
                           const std::vector<uint32_t>& gens_a,
                           const std::vector<uint32_t>& gens_b,
                           std::vector<int32_t>& map, std::vector<int32_t>& imap) {
  std::fill(map.begin(), map.end(), -1);
  std::fill(imap.begin(), imap.end(), -1);
  map[A.id] = static_cast<int32_t>(B.id);
  imap[B.id] = static_cast<int32_t>(A.id);
  std::vector<uint32_t> span{A.id};
  for (size_t at = 0; at < span.size(); ++at) {
    uint32_t x = span[at];
    for (size_t k = 0; k < gens_a.size(); ++k) {
      uint32_t y = A.at(x, gens_a[k]);
      int32_t img = static_cast<int32_t>(B.at(map[x], gens_b[k]));
      if (map[y] < 0) {
        if (imap[img] >= 0) return 0;  // not injective
        map[y] = img;
        imap[img] = static_cast<int32_t>(y);
        span.push_back(y);
      } else if (map[y] != img) {
        return 0;  // relation broken
      }
    }
  }
  return static_cast<uint32_t>(span.size());
}

bool search(const SmallTable& A, const SmallTable& B, std::vector<uint32_t>& gens_a,
            std::vector<uint32_t>& gens_b, std::vector<int32_t>& map,
            std::vector<int32_t>& imap, uint64_t& budget) {
  uint32_t spanned = close_partial_map(A, B, gens_a, gens_b, map, imap);
  if (spanned == 0) return false;
  if (spanned == A.n) return true;

  // Pick the next generator: first element outside the current span.
  uint32_t next = A.n;
  for (uint32_t i = 0; i < A.n; ++i)
    if (map[i] < 0) {
      next = i;
      break;
    }
  gens_a.push_back(next);
  for (uint32_t cand = 0; cand < B.n; ++cand) {
    if (imap[cand] >= 0) continue;  // already an image; would collide
    if (B.profile[cand] != A.profile[next]) continue;
    if (budget-- == 0)
      throw CapError("isomorphism search budget exceeded");
    gens_b.push_back(cand);
    if (search(A, B, gens_a, gens_b, map, imap, budget)) return true;
    gens_b.pop_back();
    // Restore the span of the shorter prefix for the next candidate.
    close_partial_map(A, B, gens_a, gens_b, map, imap);
  }
  gens_a.pop_back();
  return false;
}

}  // namespace

bool is_isomorphic_small(const Group& a, const Group& b, const Caps& caps) {
  if (a.order() > caps.iso_order || b.order() > caps.iso_order)
    throw CapError("isomorphism test is capped at order " +
                   std::to_string(caps.iso_order));
  if (a.order() != b.order()) return false;
  if (a.order() == 1) return true;

  SmallTable A(a, caps), B(b, caps);
  auto pa = A.profile, pb = B.profile;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return false;

  std::vector<uint32_t> gens_a, gens_b;
  std::vector<int32_t> map(A.n), imap(B.n);
  uint64_t budget = 20'000'000;
  return search(A, B, gens_a, gens_b, map, imap, budget);
}

}  // namespace centra
