#include "centra/subgroup_ops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "centra/arith.hpp"
#include "centra/errors.hpp"
#include "centra/homomorphism.hpp"
#include "centra/kernels.hpp"
#include "centra/stabilizer_chain.hpp"

namespace centra {

namespace {

void require_members(const Group& g, const std::vector<Permutation>& xs,
                     const char* what) {
  for (const Permutation& x : xs)
    if (x.degree() != g.degree() || !g.contains(x))
      throw std::invalid_argument(std::string(what) + " is not an element of the group");
}

// Nontrivial targets only; an empty result means the centralizer is G.
std::vector<Permutation> trim_targets(const std::vector<Permutation>& targets) {
  std::vector<Permutation> out;
  for (const Permutation& t : targets) {
    if (t.is_identity()) continue;
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

std::vector<Permutation> pick_elements(const std::vector<Permutation>& elems,
                                       const std::vector<uint32_t>& idx) {
  std::vector<Permutation> out;
  out.reserve(idx.size());
  for (uint32_t i : idx) out.push_back(elems[i]);
  return out;
}

}  // namespace

SubgroupRef centralizer_filter(const Group& g, const std::vector<Permutation>& targets,
                               const Caps& caps) {
  require_members(g, targets, "centralizer target");
  std::vector<Permutation> ts = trim_targets(targets);
  if (ts.empty()) return SubgroupRef::whole(g);
  const auto& elems = g.elements(caps);
  std::vector<uint32_t> hits = kernels::commuting_filter(elems, ts);
  return SubgroupRef(g, reduce_generators(g.degree(), pick_elements(elems, hits)));
}

namespace {

// Depth-first search over the stabilizer chain's transversal decomposition.
// The partial product determines the images of the base points chosen so
// far; constraints are checked as soon as both sides are determined.
class CentralizerSearch {
public:
  CentralizerSearch(const StabilizerChain& chain, uint32_t degree,
                    const std::vector<Permutation>& targets)
      : chain_(chain), degree_(degree), targets_(targets) {
    for (const Permutation& t : targets_) inverses_.push_back(t.inverse());
    determined_.assign(degree_, 0);
  }

  std::vector<Permutation> run() {
    walk(0, Permutation::identity(degree_));
    return found_;
  }

private:
  bool compatible(const Permutation& partial, uint32_t beta) const {
    uint32_t v = partial[beta];
    for (size_t k = 0; k < targets_.size(); ++k) {
      const Permutation& s = targets_[k];
      uint32_t fwd = s[beta];  // need g[s[beta]] == s[g[beta]]
      if ((fwd == beta || determined_[fwd]) && partial[fwd] != s[v]) return false;
      uint32_t back = inverses_[k][beta];  // point p with s[p] == beta
      if (determined_[back] && s[partial[back]] != v) return false;
    }
    return true;
  }

  void walk(size_t level, const Permutation& partial) {
    if (level == chain_.depth()) {
      for (const Permutation& s : targets_)
        if (!partial.commutes_with(s)) return;
      found_.push_back(partial);
      return;
    }
    uint32_t beta = chain_.base_point(level);
    for (size_t a = 0; a < chain_.orbit_size(level); ++a) {
      uint32_t b = chain_.orbit_point(level, a);
      Permutation next = chain_.coset_rep(level, b) * partial;
      determined_[beta] = 1;
      if (compatible(next, beta)) walk(level + 1, next);
      determined_[beta] = 0;
    }
  }

  const StabilizerChain& chain_;
  uint32_t degree_;
  const std::vector<Permutation>& targets_;
  std::vector<Permutation> inverses_;
  std::vector<char> determined_;
  std::vector<Permutation> found_;
};

}  // namespace

SubgroupRef centralizer_backtrack(const Group& g, const std::vector<Permutation>& targets) {
  require_members(g, targets, "centralizer target");
  std::vector<Permutation> ts = trim_targets(targets);
  if (ts.empty()) return SubgroupRef::whole(g);
  CentralizerSearch search(g.chain(), g.degree(), ts);
  return SubgroupRef(g, reduce_generators(g.degree(), search.run()));
}

SubgroupRef centralizer(const Group& g, const std::vector<Permutation>& targets,
                        const Caps& caps) {
  if (g.order() <= caps.filter_order && g.order() <= caps.enumeration)
    return centralizer_filter(g, targets, caps);
  return centralizer_backtrack(g, targets);
}

Group center(const Group& g, const Caps& caps) {
  return centralizer(g, g.generators(), caps).group();
}

SubgroupRef normalizer_filter(const Group& g, const SubgroupRef& h, const Caps& caps) {
  require_members(g, h.generators(), "subgroup generator");
  const auto& elems = g.elements(caps);
  std::vector<Permutation> gens;
  StabilizerChain picked(g.degree(), {});
  for (const Permutation& e : elems) {
    if (picked.contains(e)) continue;
    bool ok = true;
    for (const Permutation& w : h.generators())
      if (!h.contains(w.conjugated_by(e))) {
        ok = false;
        break;
      }
    if (ok) {
      picked.insert_generator(e);
      gens.push_back(e);
    }
  }
  return SubgroupRef(g, gens);
}

namespace {

class NormalizerSearch {
public:
  NormalizerSearch(const StabilizerChain& chain, uint32_t degree, const Group& h)
      : chain_(chain), degree_(degree), h_(h) {
    // Orbit structure of H: a normalizing element must map points to points
    // with the same H-orbit size.
    orbit_size_.assign(degree_, 1);
    std::vector<int32_t> orbit_of(degree_, -1);
    int32_t next_id = 0;
    for (uint32_t p = 0; p < degree_; ++p) {
      if (orbit_of[p] >= 0) continue;
      std::vector<uint32_t> orbit{p};
      orbit_of[p] = next_id;
      for (size_t a = 0; a < orbit.size(); ++a)
        for (const Permutation& w : h_.generators()) {
          uint32_t q = w[orbit[a]];
          if (orbit_of[q] < 0) {
            orbit_of[q] = next_id;
            orbit.push_back(q);
          }
        }
      for (uint32_t q : orbit) orbit_size_[q] = static_cast<uint32_t>(orbit.size());
      ++next_id;
    }
  }

  std::vector<Permutation> run() {
    walk(0, Permutation::identity(degree_));
    return found_;
  }

private:
  void walk(size_t level, const Permutation& partial) {
    if (level == chain_.depth()) {
      for (const Permutation& w : h_.generators())
        if (!h_.contains(w.conjugated_by(partial))) return;
      found_.push_back(partial);
      return;
    }
    uint32_t beta = chain_.base_point(level);
    for (size_t a = 0; a < chain_.orbit_size(level); ++a) {
      uint32_t b = chain_.orbit_point(level, a);
      Permutation next = chain_.coset_rep(level, b) * partial;
      if (orbit_size_[next[beta]] == orbit_size_[beta]) walk(level + 1, next);
    }
  }

  const StabilizerChain& chain_;
  uint32_t degree_;
  const Group& h_;
  std::vector<uint32_t> orbit_size_;
  std::vector<Permutation> found_;
};

}  // namespace

SubgroupRef normalizer_backtrack(const Group& g, const SubgroupRef& h) {
  require_members(g, h.generators(), "subgroup generator");
  NormalizerSearch search(g.chain(), g.degree(), h.group());
  return SubgroupRef(g, reduce_generators(g.degree(), search.run()));
}

SubgroupRef normalizer(const Group& g, const SubgroupRef& h, const Caps& caps) {
  if (g.order() <= caps.filter_order && g.order() <= caps.enumeration)
    return normalizer_filter(g, h, caps);
  return normalizer_backtrack(g, h);
}

SubgroupRef normal_closure(const Group& g, const std::vector<Permutation>& seeds) {
  require_members(g, seeds, "closure seed");
  StabilizerChain closure(g.degree(), seeds);
  std::vector<Permutation> gens;
  for (const Permutation& s : seeds)
    if (!s.is_identity()) gens.push_back(s);
  for (size_t i = 0; i < gens.size(); ++i) {
    Permutation w = gens[i];  // gens grows below
    for (const Permutation& s : g.generators()) {
      Permutation c = w.conjugated_by(s);
      if (!closure.contains(c)) {
        closure.insert_generator(c);
        gens.push_back(c);
      }
    }
  }
  return SubgroupRef(g, reduce_generators(g.degree(), gens));
}

Group derived_subgroup(const Group& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      Permutation c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(c);
    }
  return normal_closure(g, comms).group();
}

SeriesRecord derived_series(const Group& g) {
  SeriesRecord rec{SeriesKind::Derived, {}};
  rec.terms.push_back(SubgroupRef::whole(g));
  Group cur = g;
  while (true) {
    Group next = derived_subgroup(cur);
    if (next.order() == cur.order()) break;
    rec.terms.push_back(SubgroupRef(g, next.generators()));
    cur = next;
  }
  return rec;
}

std::optional<int> derived_length(const Group& g) {
  SeriesRecord rec = derived_series(g);
  if (!rec.terms.back().is_trivial()) return std::nullopt;
  return static_cast<int>(rec.terms.size()) - 1;
}

bool is_soluble(const Group& g) { return derived_length(g).has_value(); }

bool is_perfect(const Group& g) {
  return derived_subgroup(g).order() == g.order();
}

Group perfect_core(const Group& g) {
  Group cur = g;
  while (true) {
    Group next = derived_subgroup(cur);
    if (next.order() == cur.order()) return cur;
    cur = next;
  }
}

bool is_simple(const Group& g, const Caps& caps) {
  if (g.is_trivial()) return false;
  for (const Permutation& rep : g.conjugacy_class_reps(caps)) {
    if (rep.is_identity()) continue;
    if (normal_closure(g, {rep}).order() != g.order()) return false;
  }
  return true;
}

SubgroupRef sylow(const Group& g, uint64_t p, const Caps& caps) {
  if (!is_prime(p)) throw std::invalid_argument("sylow requires a prime");
  int a = valuation(g.order(), p);
  if (a == 0) return SubgroupRef::trivial(g);
  uint64_t target = ipow(p, a);
  std::vector<Permutation> pgens;
  Group pgroup(g.degree(), pgens);
  while (pgroup.order() < target) {
    Group norm = pgens.empty() ? g : normalizer(g, SubgroupRef(g, pgens), caps).group();
    bool grew = false;
    for (const Permutation& y : norm.elements(caps)) {
      uint64_t k = y.order();
      int v = valuation(k, p);
      if (v == 0) continue;
      uint64_t m = k / ipow(p, v);
      // p-part of y: y^m has order p^v
      Permutation r = Permutation::identity(g.degree());
      Permutation pw = y;
      while (m > 0) {
        if (m & 1) r = r * pw;
        pw = pw * pw;
        m >>= 1;
      }
      if (pgroup.contains(r)) continue;
      pgens.push_back(r);
      pgroup = Group(g.degree(), pgens);
      grew = true;
      break;
    }
    if (!grew) throw std::logic_error("sylow growth stalled");
  }
  return SubgroupRef(g, pgens);
}

namespace {

std::vector<uint32_t> subgroup_fingerprint(const Group& g, const Group& sub,
                                           const Caps& caps) {
  std::vector<uint32_t> idx;
  for (const Permutation& e : sub.elements(caps))
    idx.push_back(g.element_index(e, caps));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

SubgroupRef p_core(const Group& g, uint64_t p, const Caps& caps) {
  SubgroupRef syl = sylow(g, p, caps);
  if (syl.is_trivial()) return syl;
  const auto& elems = g.elements(caps);
  std::vector<uint32_t> start = subgroup_fingerprint(g, syl.group(), caps);
  std::vector<uint32_t> meet = start;
  std::set<std::vector<uint32_t>> seen{start};
  std::vector<std::vector<uint32_t>> queue{start};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<uint32_t> cur = queue[qi];
    for (const Permutation& s : g.generators()) {
      std::vector<uint32_t> conj;
      conj.reserve(cur.size());
      for (uint32_t i : cur) conj.push_back(g.element_index(elems[i].conjugated_by(s), caps));
      std::sort(conj.begin(), conj.end());
      if (seen.insert(conj).second) {
        meet = kernels::intersect_sorted(meet, conj);
        queue.push_back(std::move(conj));
      }
    }
    if (meet.size() == 1) break;  // already trivial
  }
  return SubgroupRef(g, reduce_generators(g.degree(), pick_elements(elems, meet)));
}

SubgroupRef p_prime_core(const Group& g, uint64_t p, const Caps& caps) {
  if (!is_prime(p)) throw std::invalid_argument("prime expected");
  if (g.order() % p != 0) return SubgroupRef::whole(g);
  std::vector<Permutation> gens;
  for (const Permutation& rep : g.conjugacy_class_reps(caps)) {
    if (rep.is_identity()) continue;
    SubgroupRef ncl = normal_closure(g, {rep});
    if (ncl.order() % p != 0)
      gens.insert(gens.end(), ncl.generators().begin(), ncl.generators().end());
  }
  return SubgroupRef(g, reduce_generators(g.degree(), gens));
}

SubgroupRef fitting(const Group& g, const Caps& caps) {
  std::vector<Permutation> gens;
  for (uint64_t p : prime_divisors(g.order())) {
    SubgroupRef core = p_core(g, p, caps);
    gens.insert(gens.end(), core.generators().begin(), core.generators().end());
  }
  return SubgroupRef(g, reduce_generators(g.degree(), gens));
}

namespace {

// Lifts a subgroup of a quotient back through the projection, including the
// kernel generators.
std::vector<Permutation> lift_subgroup(const Homomorphism& onto,
                                       const std::vector<Permutation>& kernel_gens,
                                       const Group& sub) {
  std::vector<Permutation> gens = kernel_gens;
  for (const Permutation& w : sub.generators()) gens.push_back(onto.preimage(w));
  return gens;
}

}  // namespace

SubgroupRef upper_fitting_series(const Group& g, int i, const Caps& caps) {
  if (i < 1) throw std::invalid_argument("series index must be at least 1");
  SubgroupRef f = fitting(g, caps);
  if (f.is_trivial()) return f;  // F_1 = 1 forces F_i = 1 for every i
  for (int j = 2; j <= i; ++j) {
    if (f.order() == g.order()) break;
    Quotient q = quotient(g, f.group(), caps);
    SubgroupRef ff = fitting(q.group, caps);
    if (ff.is_trivial()) break;
    f = SubgroupRef(g, reduce_generators(g.degree(),
                                         lift_subgroup(q.projection, f.generators(),
                                                       ff.group())));
  }
  return f;
}

SubgroupRef soluble_radical(const Group& g, const Caps& caps) {
  SubgroupRef r = fitting(g, caps);
  if (r.is_trivial()) return r;
  while (r.order() != g.order()) {
    Quotient q = quotient(g, r.group(), caps);
    SubgroupRef ff = fitting(q.group, caps);
    if (ff.is_trivial()) break;
    r = SubgroupRef(g, reduce_generators(g.degree(),
                                         lift_subgroup(q.projection, r.generators(),
                                                       ff.group())));
  }
  return r;
}

SubgroupRef p_soluble_radical(const Group& g, uint64_t p, const Caps& caps) {
  if (!is_prime(p)) throw std::invalid_argument("prime expected");
  // After lifting O_{p'} the quotient has trivial p'-core (and after O_p a
  // trivial p-core), so trying the p'-core first reproduces the alternating
  // series.  The first round works on g directly: no quotient by the trivial
  // subgroup is ever formed.
  SubgroupRef t = p_prime_core(g, p, caps);
  if (t.is_trivial()) t = p_core(g, p, caps);
  if (t.is_trivial()) return t;
  while (t.order() != g.order()) {
    Quotient q = quotient(g, t.group(), caps);
    SubgroupRef up = p_prime_core(q.group, p, caps);
    if (up.is_trivial()) up = p_core(q.group, p, caps);
    if (up.is_trivial()) break;
    t = SubgroupRef(g, reduce_generators(g.degree(),
                                         lift_subgroup(q.projection, t.generators(),
                                                       up.group())));
  }
  return t;
}

std::vector<SubgroupRef> minimal_normal_subgroups(const Group& g, const Caps& caps) {
  if (g.is_trivial()) throw std::invalid_argument("group must be nontrivial");
  std::vector<SubgroupRef> candidates;
  for (const Permutation& rep : g.conjugacy_class_reps(caps)) {
    if (rep.is_identity()) continue;
    SubgroupRef ncl = normal_closure(g, {rep});
    bool dup = false;
    for (const SubgroupRef& c : candidates)
      if (c.same_subgroup(ncl)) {
        dup = true;
        break;
      }
    if (!dup) candidates.push_back(std::move(ncl));
  }
  std::vector<SubgroupRef> minimal;
  for (const SubgroupRef& c : candidates) {
    bool is_min = true;
    for (const SubgroupRef& other : candidates) {
      if (other.order() >= c.order()) continue;
      if (c.contains_subgroup(other)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(c);
  }
  return minimal;
}

SubgroupRef socle(const Group& g, const Caps& caps) {
  std::vector<Permutation> gens;
  for (const SubgroupRef& m : minimal_normal_subgroups(g, caps))
    gens.insert(gens.end(), m.generators().begin(), m.generators().end());
  return SubgroupRef(g, reduce_generators(g.degree(), gens));
}

Group intersect_subgroups(const Group& a, const Group& b, const Caps& caps) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("intersection requires equal degrees");
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> hits;
  for (const Permutation& e : small.elements(caps))
    if (large.contains(e)) hits.push_back(e);
  return Group(a.degree(), reduce_generators(a.degree(), hits));
}

}  // namespace centra
