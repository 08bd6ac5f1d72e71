#include "centra/bounds.hpp"

#include <stdexcept>

#include "centra/chain_length.hpp"
#include "centra/homomorphism.hpp"
#include "centra/lattice.hpp"
#include "centra/layer.hpp"
#include "centra/simple_id.hpp"
#include "centra/subgroup_ops.hpp"

namespace centra {

namespace {

// Q is subnormal in G iff the descending normal-closure series
// G ⊵ Q^G ⊵ Q^{Q^G} ⊵ … terminates at Q.
bool is_subnormal(const Group& g, const Group& q) {
  for (const Permutation& gen : q.generators())
    if (!g.contains(gen)) return false;
  Group current = g;
  while (true) {
    Group next = normal_closure(current, q.generators()).group();
    if (next.order() == q.order()) return true;
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
}

// l(G/N) without materializing a quotient when N is trivial or the whole
// group.
uint64_t quotient_chain_length(const Group& g, const SubgroupRef& n,
                               const Caps& caps) {
  if (n.order() == g.order()) return 0;
  if (n.is_trivial()) return subgroup_chain_length(g, caps);
  return subgroup_chain_length(quotient(g, n.group(), caps).group, caps);
}

}  // namespace

CheckReport check_finext_bound(const Group& g, const SubgroupRef& n,
                               const Caps& caps) {
  if (!is_normal_subgroup(g, n.group()))
    throw std::invalid_argument("N is not normal in G");
  CheckReport r;
  r.check_name = "finext_bound";
  r.inputs["order"] = static_cast<int64_t>(g.order());
  r.inputs["normal_order"] = static_cast<int64_t>(n.order());

  CdimResult inner = cdim(n.group(), caps);
  int64_t l = static_cast<int64_t>(quotient_chain_length(g, n, caps));
  CdimResult outer = cdim(g, caps);

  int64_t k = inner.value_steps, c = outer.value_steps;
  int64_t bound = (l + 1) * (l + 1) * (k + 1);
  int64_t k_terms = inner.value_terms, c_terms = outer.value_terms;
  int64_t bound_terms = (l + 1) * (l + 1) * (k_terms + 1);

  r.computed["k_steps"] = k;
  r.computed["k_terms"] = k_terms;
  r.computed["l_quotient"] = l;
  r.computed["cdim_steps"] = c;
  r.computed["cdim_terms"] = c_terms;
  r.computed["bound_steps"] = bound;
  r.computed["bound_terms"] = bound_terms;
  r.computed["terms_ok"] = c_terms <= bound_terms ? 1 : 0;
  r.status = c <= bound ? CheckStatus::Pass : CheckStatus::Fail;
  r.margin = bound - c;
  return r;
}

CheckReport check_dkr_bound(const Group& g, const SubgroupRef& h,
                            const Caps& caps) {
  for (const Permutation& gen : h.generators())
    if (!g.contains(gen))
      throw std::invalid_argument("H is not a subgroup of G");
  CheckReport r;
  r.check_name = "dkr_bound";
  r.inputs["order"] = static_cast<int64_t>(g.order());
  r.inputs["subgroup_order"] = static_cast<int64_t>(h.order());

  int64_t k = static_cast<int64_t>(g.order() / h.order());
  int64_t d = cdim(h.group(), caps).value_steps;
  int64_t c = cdim(g, caps).value_steps;
  int64_t bound = k * (k * (d + 2) + 2);

  r.computed["index"] = k;
  r.computed["d_steps"] = d;
  r.computed["cdim_steps"] = c;
  r.computed["bound_steps"] = bound;
  r.status = c <= bound ? CheckStatus::Pass : CheckStatus::Fail;
  r.margin = bound - c;
  return r;
}

CheckReport check_factor_count(const Group& g, const Caps& caps,
                               const RecognitionTable& table) {
  CheckReport r;
  r.check_name = "factor_count";
  r.inputs["order"] = static_cast<int64_t>(g.order());

  int64_t nonabelian = 0, lambda = 0;
  for (const SimpleFactorId& id : composition_factors(g, caps, table)) {
    if (id.kind == SimpleKind::Cyclic) continue;
    ++nonabelian;
    lambda += id.lambda;
  }
  int64_t k = cdim(g, caps).value_steps;
  int64_t bound = 5 * k;

  r.computed["nonabelian_factors"] = nonabelian;
  r.computed["cdim_steps"] = k;
  r.computed["bound"] = bound;
  r.computed["lambda"] = lambda;
  r.margin = bound - nonabelian;
  if (k == 0) {
    r.status = CheckStatus::Pass;
    r.note = "vacuous: cdim_steps = 0";
  } else {
    r.status = nonabelian < bound ? CheckStatus::Pass : CheckStatus::Fail;
  }
  return r;
}

CheckReport check_indaut_lemma(const Group& g, const SubgroupRef& q,
                               const Caps& caps) {
  if (!is_quasisimple(q.group(), caps) || !is_subnormal(g, q.group()))
    throw std::invalid_argument("Q is not a component of G");
  CheckReport r;
  r.check_name = "indaut_lemma";
  r.inputs["order"] = static_cast<int64_t>(g.order());
  r.inputs["component_order"] = static_cast<int64_t>(q.order());

  Group aut = induced_automorphisms(g, q, caps);

  SubgroupRef radical = soluble_radical(g, caps);
  Group aut_bar = [&]() -> Group {
    if (radical.is_trivial()) return aut;  // the bar map is the identity
    Quotient bar = quotient(g, radical.group(), caps);
    std::vector<Permutation> images;
    for (const Permutation& gen : q.generators())
      images.push_back(bar.projection.apply(gen));
    SubgroupRef q_bar(bar.group, std::move(images));
    return induced_automorphisms(bar.group, q_bar, caps);
  }();

  bool ok = aut.order() == aut_bar.order();
  int64_t iso_checked = 0;
  if (ok && aut.order() <= caps.iso_order) {
    iso_checked = 1;
    ok = is_isomorphic_small(aut, aut_bar, caps);
  }
  r.computed["aut_order"] = static_cast<int64_t>(aut.order());
  r.computed["aut_bar_order"] = static_cast<int64_t>(aut_bar.order());
  r.computed["radical_order"] = static_cast<int64_t>(radical.order());
  r.computed["iso_checked"] = iso_checked;
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

}  // namespace centra
