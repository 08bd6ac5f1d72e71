#include "centra/homomorphism.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "centra/errors.hpp"
#include "centra/stabilizer_chain.hpp"

namespace centra {

struct Homomorphism::Data {
  Group domain;
  Group codomain;
  std::vector<Permutation> images;
  uint32_t n;  // domain degree
  uint32_t m;  // codomain degree
  // Chain for the pair subgroup with base points drawn from the domain block
  // first; built at construction, also serves as the homomorphism check.
  std::unique_ptr<StabilizerChain> fwd;

  mutable std::mutex lock;
  mutable std::unique_ptr<StabilizerChain> bwd;  // codomain block first
  mutable std::optional<Group> kernel;

  Data(Group dom, Group cod, std::vector<Permutation> imgs)
      : domain(std::move(dom)), codomain(std::move(cod)), images(std::move(imgs)),
        n(domain.degree()), m(codomain.degree()) {}

  Permutation pair_generator(size_t i) const {
    std::vector<uint32_t> t(n + m);
    const Permutation& a = domain.generators()[i];
    const Permutation& b = images[i];
    for (uint32_t p = 0; p < n; ++p) t[p] = a[p];
    for (uint32_t p = 0; p < m; ++p) t[n + p] = n + b[p];
    return Permutation(std::move(t));
  }

  std::vector<Permutation> pair_generators() const {
    std::vector<Permutation> out;
    out.reserve(images.size());
    for (size_t i = 0; i < images.size(); ++i) out.push_back(pair_generator(i));
    return out;
  }

  // Chain whose base walks the codomain block before the domain block; level
  // m is then exactly the pointwise stabilizer of the codomain block, i.e.
  // the kernel paired with the identity.
  const StabilizerChain& backward() const {
    std::scoped_lock guard(lock);
    if (!bwd) {
      std::vector<uint32_t> priority(n + m);
      for (uint32_t p = 0; p < n; ++p) priority[p] = m + p;
      for (uint32_t p = 0; p < m; ++p) priority[n + p] = p;
      std::vector<uint32_t> base(m);
      std::iota(base.begin(), base.end(), n);
      bwd = std::make_unique<StabilizerChain>(n + m, pair_generators(),
                                              std::move(priority), base);
    }
    return *bwd;
  }
};

Homomorphism::Homomorphism(Group domain, Group codomain, std::vector<Permutation> images) {
  if (images.size() != domain.generators().size())
    throw std::invalid_argument("need exactly one image per domain generator");
  for (const Permutation& q : images)
    if (q.degree() != codomain.degree() || !codomain.contains(q))
      throw std::invalid_argument("generator image lies outside the codomain");
  data_ = std::make_shared<Data>(std::move(domain), std::move(codomain), std::move(images));
  data_->fwd = std::make_unique<StabilizerChain>(data_->n + data_->m,
                                                 data_->pair_generators());
  if (data_->fwd->order() != data_->domain.order())
    throw std::invalid_argument("generator images do not define a homomorphism");
}

const Group& Homomorphism::domain() const { return data_->domain; }
const Group& Homomorphism::codomain() const { return data_->codomain; }
const std::vector<Permutation>& Homomorphism::generator_images() const {
  return data_->images;
}

Homomorphism Homomorphism::identity(const Group& g) {
  return Homomorphism(g, g, g.generators());
}

Permutation Homomorphism::apply(const Permutation& g) const {
  const Data& d = *data_;
  if (g.degree() != d.n)
    throw std::invalid_argument("element degree does not match the domain");
  // Strip the pair (g, unknown) through the forward chain by domain images
  // alone; the product of the coset representatives met on the way recovers
  // the codomain side.
  std::vector<uint32_t> r1(d.n);
  for (uint32_t p = 0; p < d.n; ++p) r1[p] = g[p];
  std::vector<uint32_t> acc2(d.m);
  std::iota(acc2.begin(), acc2.end(), 0);
  std::vector<uint32_t> u1inv(d.n), scratch(std::max(d.n, d.m));
  for (size_t i = 0; i < d.fwd->depth(); ++i) {
    uint32_t beta = d.fwd->base_point(i);
    // Valid homomorphisms never need codomain-block base points.
    uint32_t image = r1[beta];
    if (!d.fwd->in_orbit(i, image))
      throw std::invalid_argument("element is not in the domain group");
    Permutation u = d.fwd->coset_rep(i, image);
    for (uint32_t p = 0; p < d.n; ++p) u1inv[u[p]] = p;
    for (uint32_t p = 0; p < d.n; ++p) r1[p] = u1inv[r1[p]];
    for (uint32_t p = 0; p < d.m; ++p) scratch[p] = acc2[u[d.n + p] - d.n];
    std::copy(scratch.begin(), scratch.begin() + d.m, acc2.begin());
  }
  for (uint32_t p = 0; p < d.n; ++p)
    if (r1[p] != p) throw std::invalid_argument("element is not in the domain group");
  return Permutation(std::move(acc2));
}

namespace {

// Strips (unknown, q) through the codomain-block levels of the backward
// chain; returns the domain side of the matched pair, or nothing when q is
// not an image.
std::optional<Permutation> backward_strip(const StabilizerChain& bwd, uint32_t n,
                                          uint32_t m, const Permutation& q) {
  std::vector<uint32_t> r2(m);
  for (uint32_t p = 0; p < m; ++p) r2[p] = q[p];
  std::vector<uint32_t> acc1(n);
  std::iota(acc1.begin(), acc1.end(), 0);
  std::vector<uint32_t> u2inv(m), scratch(std::max(n, m));
  for (uint32_t i = 0; i < m; ++i) {
    uint32_t image = n + r2[bwd.base_point(i) - n];
    if (!bwd.in_orbit(i, image)) return std::nullopt;
    Permutation u = bwd.coset_rep(i, image);
    for (uint32_t p = 0; p < m; ++p) u2inv[u[n + p] - n] = p;
    for (uint32_t p = 0; p < m; ++p) r2[p] = u2inv[r2[p]];
    for (uint32_t p = 0; p < n; ++p) scratch[p] = acc1[u[p]];
    std::copy(scratch.begin(), scratch.begin() + n, acc1.begin());
  }
  for (uint32_t p = 0; p < m; ++p)
    if (r2[p] != p) return std::nullopt;
  return Permutation(std::move(acc1));
}

}  // namespace

bool Homomorphism::in_image(const Permutation& q) const {
  const Data& d = *data_;
  if (q.degree() != d.m) return false;
  if (!d.codomain.contains(q)) return false;
  return backward_strip(d.backward(), d.n, d.m, q).has_value();
}

Permutation Homomorphism::preimage(const Permutation& q) const {
  const Data& d = *data_;
  if (q.degree() != d.m)
    throw std::invalid_argument("element degree does not match the codomain");
  auto got = backward_strip(d.backward(), d.n, d.m, q);
  if (!got) throw std::invalid_argument("element is not in the image");
  return *std::move(got);
}

Group Homomorphism::image() const {
  return Group(data_->m, data_->images);
}

const Group& Homomorphism::kernel() const {
  const Data& d = *data_;
  const StabilizerChain& bwd = d.backward();
  std::scoped_lock guard(d.lock);
  if (!d.kernel) {
    std::vector<Permutation> parts;
    if (bwd.depth() > d.m) {
      for (const Permutation& g : bwd.level_generators(d.m)) {
        std::vector<uint32_t> t(d.n);
        for (uint32_t p = 0; p < d.n; ++p) t[p] = g[p];
        parts.push_back(Permutation(std::move(t)));
      }
    }
    d.kernel = Group(d.n, reduce_generators(d.n, parts));
  }
  return *d.kernel;
}

bool is_normal_subgroup(const Group& g, const Group& n) {
  if (n.degree() != g.degree()) return false;
  for (const Permutation& w : n.generators())
    if (!g.contains(w)) return false;
  for (const Permutation& s : g.generators())
    for (const Permutation& w : n.generators())
      if (!n.contains(w.conjugated_by(s))) return false;
  return true;
}

namespace {

// Lexicographically least element of the coset n_elems * y.
Permutation canonical_coset_rep(const std::vector<Permutation>& n_elems,
                                const Permutation& y) {
  Permutation best = n_elems.front() * y;
  for (size_t i = 1; i < n_elems.size(); ++i) {
    Permutation c = n_elems[i] * y;
    if (c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

Quotient quotient(const Group& g, const Group& n, const Caps& caps) {
  if (!is_normal_subgroup(g, n))
    throw std::invalid_argument("quotient requires a normal subgroup");
  uint64_t index = g.order() / n.order();
  if (index > caps.quotient_index)
    throw CapError("quotient index " + std::to_string(index) +
                   " exceeds cap " + std::to_string(caps.quotient_index));
  uint32_t m = static_cast<uint32_t>(index);

  const size_t gen_count = g.generators().size();
  std::vector<std::vector<uint32_t>> action(gen_count);

  if (m == 1) {
    for (auto& row : action) row = {0};
  } else if (n.order() <= caps.filter_order && n.order() <= caps.enumeration) {
    // Small kernel: cosets carry a canonical representative (their least
    // element), so identification is a hash lookup.
    const auto& n_elems = n.elements(caps);
    std::unordered_map<Permutation, uint32_t, PermHash> ids;
    std::vector<Permutation> reps;
    auto intern = [&](const Permutation& y) {
      Permutation key = canonical_coset_rep(n_elems, y);
      auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<uint32_t>(reps.size()));
      if (fresh) reps.push_back(it->first);
      return it->second;
    };
    for (auto& row : action) row.assign(m, 0);
    intern(g.identity());
    for (uint32_t c = 0; c < reps.size(); ++c) {
      Permutation rep = reps[c];  // reps may reallocate while we append
      for (size_t gi = 0; gi < gen_count; ++gi)
        action[gi][c] = intern(rep * g.generators()[gi]);
    }
    if (reps.size() != m)
      throw std::logic_error("coset walk did not close");
  } else {
    // Large kernel: identify cosets by membership tests against the known
    // representatives.
    std::vector<Permutation> reps{g.identity()};
    auto intern = [&](const Permutation& y) {
      for (uint32_t c = 0; c < reps.size(); ++c)
        if (n.contains(y * reps[c].inverse())) return c;
      reps.push_back(y);
      return static_cast<uint32_t>(reps.size() - 1);
    };
    for (auto& row : action) row.assign(m, 0);
    for (uint32_t c = 0; c < reps.size(); ++c) {
      Permutation rep = reps[c];
      for (size_t gi = 0; gi < gen_count; ++gi)
        action[gi][c] = intern(rep * g.generators()[gi]);
    }
    if (reps.size() != m)
      throw std::logic_error("coset walk did not close");
  }

  std::vector<Permutation> images;
  images.reserve(gen_count);
  for (auto& row : action) images.push_back(Permutation(std::move(row)));
  Group q(m, images);
  return Quotient{q, Homomorphism(g, q, images)};
}

}  // namespace centra
