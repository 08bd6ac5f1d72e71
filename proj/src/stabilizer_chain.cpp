#include "centra/stabilizer_chain.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "centra/errors.hpp"

namespace centra {

namespace {
// Explicit transversals are stored while orbit_size * degree stays below this
// many words; beyond that, representatives are rebuilt from the Schreier tree.
constexpr size_t kExplicitBudget = size_t{1} << 22;
}  // namespace

StabilizerChain::StabilizerChain(uint32_t degree,
                                 const std::vector<Permutation>& generators,
                                 std::vector<uint32_t> point_priority,
                                 const std::vector<uint32_t>& prescribed_base)
    : degree_(degree), priority_(std::move(point_priority)) {
  if (degree_ == 0) throw std::invalid_argument("group degree must be positive");
  if (priority_.empty()) {
    priority_.resize(degree_);
    for (uint32_t p = 0; p < degree_; ++p) priority_[p] = p;
  } else if (priority_.size() != degree_) {
    throw std::invalid_argument("point priority table has wrong size");
  }
  for (uint32_t b : prescribed_base) {
    if (b >= degree_) throw std::invalid_argument("prescribed base point out of range");
    for (const Level& lvl : levels_)
      if (lvl.beta == b) throw std::invalid_argument("prescribed base point repeated");
    add_level(b);
  }

  std::vector<Permutation> seed;
  for (const Permutation& g : generators) {
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree does not match group degree");
    if (!g.is_identity()) seed.push_back(g);
  }

  auto raw_insert = [&](const Permutation& p) {
    auto [residue, level] = strip(p, 0);
    if (residue.is_identity()) return;
    if (level == levels_.size()) add_level(pick_base_point(residue));
    for (size_t k = 0; k <= level; ++k) {
      auto& gens = levels_[k].gens;
      if (std::find(gens.begin(), gens.end(), residue) == gens.end())
        gens.push_back(residue);
    }
    for (size_t k = level + 1; k-- > 0;) rebuild_orbit(k);
  };

  for (const Permutation& g : seed) raw_insert(g);

  // Randomized sifting pre-pass: short random subproducts of the input
  // generators tend to land deep in the chain and cut down the number of
  // Schreier generators the closure pass has to fix up.  The seed is fixed so
  // construction is reproducible.
  if (seed.size() >= 2) {
    std::mt19937_64 rng(0xC3D1A5EEDull);
    for (int round = 0; round < 24; ++round) {
      Permutation w = seed[rng() % seed.size()];
      size_t factors = 2 + rng() % 4;
      for (size_t f = 0; f < factors; ++f) w = w * seed[rng() % seed.size()];
      raw_insert(w);
    }
  }

  deterministic_closure();
  recompute_order();
}

uint32_t StabilizerChain::pick_base_point(const Permutation& moved) const {
  uint32_t best = degree_;
  for (uint32_t p = 0; p < degree_; ++p) {
    if (moved[p] == p) continue;
    if (best == degree_ || priority_[p] < priority_[best]) best = p;
  }
  if (best == degree_)
    throw std::logic_error("tried to pick a base point for the identity");
  return best;
}

void StabilizerChain::add_level(uint32_t beta) {
  Level lvl;
  lvl.beta = beta;
  lvl.pos.assign(degree_, -1);
  levels_.push_back(std::move(lvl));
  rebuild_orbit(levels_.size() - 1);
}

void StabilizerChain::rebuild_orbit(size_t li) {
  Level& lvl = levels_[li];
  lvl.orbit.clear();
  lvl.tree.clear();
  lvl.transversal.clear();
  std::fill(lvl.pos.begin(), lvl.pos.end(), -1);

  lvl.orbit.push_back(lvl.beta);
  lvl.tree.emplace_back(-1, -1);
  lvl.pos[lvl.beta] = 0;
  for (size_t a = 0; a < lvl.orbit.size(); ++a) {
    uint32_t p = lvl.orbit[a];
    for (size_t gi = 0; gi < lvl.gens.size(); ++gi) {
      uint32_t q = lvl.gens[gi][p];
      if (lvl.pos[q] < 0) {
        lvl.pos[q] = static_cast<int32_t>(lvl.orbit.size());
        lvl.orbit.push_back(q);
        lvl.tree.emplace_back(static_cast<int32_t>(a), static_cast<int32_t>(gi));
      }
    }
  }

  lvl.lazy = lvl.orbit.size() * degree_ > kExplicitBudget;
  if (!lvl.lazy) {
    lvl.transversal.reserve(lvl.orbit.size());
    lvl.transversal.push_back(Permutation::identity(degree_));
    for (size_t a = 1; a < lvl.orbit.size(); ++a) {
      auto [parent, gi] = lvl.tree[a];
      lvl.transversal.push_back(lvl.transversal[parent] * lvl.gens[gi]);
    }
  }
}

Permutation StabilizerChain::coset_rep(size_t li, uint32_t point) const {
  const Level& lvl = levels_[li];
  int32_t a = lvl.pos[point];
  if (a < 0) throw std::invalid_argument("point outside level orbit");
  if (!lvl.lazy) return lvl.transversal[a];
  std::vector<int32_t> path;
  while (lvl.tree[a].first >= 0) {
    path.push_back(lvl.tree[a].second);
    a = lvl.tree[a].first;
  }
  Permutation rep = Permutation::identity(degree_);
  for (size_t i = path.size(); i-- > 0;) rep = rep * lvl.gens[path[i]];
  return rep;
}

std::pair<Permutation, size_t> StabilizerChain::strip(const Permutation& p,
                                                      size_t level) const {
  Permutation r = p;
  for (size_t i = level; i < levels_.size(); ++i) {
    uint32_t image = r[levels_[i].beta];
    if (levels_[i].pos[image] < 0) return {std::move(r), i};
    r = r * coset_rep(i, image).inverse();
  }
  return {std::move(r), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = strip(p, 0);
  return level == levels_.size() && residue.is_identity();
}

void StabilizerChain::add_strong_generator(size_t at_level, const Permutation& p) {
  if (at_level == levels_.size()) add_level(pick_base_point(p));
  for (size_t k = 0; k <= at_level; ++k) {
    auto& gens = levels_[k].gens;
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
  }
  for (size_t k = at_level + 1; k-- > 0;) rebuild_orbit(k);
}

void StabilizerChain::deterministic_closure() {
  // Verify, level by level from the bottom, that every Schreier generator
  // strips to the identity through the deeper chain; any residue is added as
  // a strong generator and checking resumes at the deepest level it touched.
  if (levels_.empty()) return;
  size_t i = levels_.size() - 1;
  while (true) {
    bool dirty = false;
    Level& lvl = levels_[i];
    for (size_t a = 0; a < lvl.orbit.size() && !dirty; ++a) {
      uint32_t p = lvl.orbit[a];
      Permutation up = coset_rep(i, p);
      for (size_t gi = 0; gi < lvl.gens.size() && !dirty; ++gi) {
        uint32_t q = lvl.gens[gi][p];
        Permutation schreier = up * lvl.gens[gi] * coset_rep(i, q).inverse();
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(schreier, i + 1);
        if (residue.is_identity() && j == levels_.size()) continue;
        // Residue fixes base points 0..j-1, so it is a valid strong
        // generator for levels i+1..j.
        size_t target = j;
        if (target == levels_.size()) {
          add_level(pick_base_point(residue));
        }
        for (size_t k = i + 1; k <= target; ++k) {
          auto& gens = levels_[k].gens;
          if (std::find(gens.begin(), gens.end(), residue) == gens.end())
            gens.push_back(residue);
        }
        for (size_t k = target + 1; k-- > i + 1;) rebuild_orbit(k);
        i = target;
        dirty = true;
      }
    }
    if (dirty) continue;
    if (i == 0) break;
    --i;
  }
}

void StabilizerChain::recompute_order() {
  order_ = 1;
  for (const Level& lvl : levels_) {
    uint64_t next;
    if (__builtin_mul_overflow(order_, static_cast<uint64_t>(lvl.orbit.size()), &next))
      throw CapError("group order exceeds the 64-bit range");
    order_ = next;
  }
}

void StabilizerChain::insert_generator(const Permutation& p) {
  if (p.degree() != degree_)
    throw std::invalid_argument("generator degree does not match group degree");
  if (contains(p)) return;
  auto [residue, level] = strip(p, 0);
  add_strong_generator(level, residue);
  deterministic_closure();
  recompute_order();
}

void StabilizerChain::for_each_element(
    const std::function<void(const Permutation&)>& fn) const {
  // Every element factors uniquely as t_k * ... * t_1 with t_i drawn from the
  // level-i transversal; walk those products depth first.
  if (levels_.empty()) {
    fn(Permutation::identity(degree_));
    return;
  }
  std::function<void(size_t, const Permutation&)> rec =
      [&](size_t li, const Permutation& acc) {
        if (li == levels_.size()) {
          fn(acc);
          return;
        }
        const Level& lvl = levels_[li];
        for (size_t a = 0; a < lvl.orbit.size(); ++a)
          rec(li + 1, coset_rep(li, lvl.orbit[a]) * acc);
      };
  rec(0, Permutation::identity(degree_));
}

}  // namespace centra
