#include "centra/layer.hpp"

#include <algorithm>

#include "centra/homomorphism.hpp"
#include "centra/subgroup_ops.hpp"

namespace centra {

bool is_quasisimple(const Group& g, const Caps& caps) {
  if (!is_perfect(g)) return false;
  Group z = center(g, caps);
  if (z.order() == g.order()) return false;  // perfect and abelian ⇒ trivial
  if (z.is_trivial()) return is_simple(g, caps);
  Quotient q = quotient(g, z, caps);
  return is_simple(q.group, caps);
}

ComponentSet components(const Group& g, const Caps& caps) {
  ComponentSet out{g, {}, SubgroupRef::trivial(g)};
  SubgroupRef r = soluble_radical(g, caps);
  if (r.order() == g.order()) return out;  // soluble: no components

  Group c = centralizer(g, r.generators(), caps).group();
  Group z = intersect_subgroups(c, r.group(), caps);
  if (c.order() == z.order()) return out;  // C_G(R) is soluble

  // Pass to C̄ = C/Z, whose soluble radical is trivial; components of G are
  // the perfect cores of the preimages of the simple factors of Soc(C̄).
  std::vector<std::vector<Permutation>> component_gens;
  auto collect = [&](const Group& cbar, auto&& lift) {
    for (const SubgroupRef& m : minimal_normal_subgroups(cbar, caps)) {
      if (m.group().is_abelian()) continue;
      for (const SubgroupRef& s : minimal_normal_subgroups(m.group(), caps))
        component_gens.push_back(lift(s.generators()));
    }
  };

  if (z.is_trivial()) {
    collect(c, [](const std::vector<Permutation>& gens) { return gens; });
  } else {
    Quotient q = quotient(c, z, caps);
    collect(q.group, [&](const std::vector<Permutation>& gens) {
      std::vector<Permutation> lifted = z.generators();
      for (const Permutation& w : gens) lifted.push_back(q.projection.preimage(w));
      return lifted;
    });
  }

  std::vector<Permutation> layer_gens;
  for (const auto& gens : component_gens) {
    Group x(g.degree(), gens);
    Group core = perfect_core(x);
    out.components.emplace_back(g, core.generators());
    layer_gens.insert(layer_gens.end(), core.generators().begin(),
                      core.generators().end());
  }
  out.layer = SubgroupRef(g, reduce_generators(g.degree(), layer_gens));
  return out;
}

SubgroupRef generalized_fitting(const Group& g, const Caps& caps) {
  SubgroupRef f = fitting(g, caps);
  SubgroupRef e = components(g, caps).layer;
  std::vector<Permutation> gens = f.generators();
  gens.insert(gens.end(), e.generators().begin(), e.generators().end());
  return SubgroupRef(g, reduce_generators(g.degree(), gens));
}

Group induced_automorphisms(const Group& g, const SubgroupRef& h, const Caps& caps) {
  const Group& hg = h.group();
  const auto& points = hg.elements(caps);
  const uint32_t m = static_cast<uint32_t>(points.size());
  Group n = normalizer(g, h, caps).group();
  std::vector<Permutation> images;
  for (const Permutation& w : n.generators()) {
    std::vector<uint32_t> img(m);
    for (uint32_t i = 0; i < m; ++i)
      img[i] = hg.element_index(points[i].conjugated_by(w), caps);
    Permutation p{std::move(img)};
    if (!p.is_identity()) images.push_back(std::move(p));
  }
  return Group(m, images);
}

}  // namespace centra
