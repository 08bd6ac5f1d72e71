#include "centra/group.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "centra/errors.hpp"

namespace centra {

struct Group::Data {
  uint32_t degree;
  std::vector<Permutation> generators;

  std::mutex lock;
  std::optional<StabilizerChain> chain;
  std::optional<std::vector<Permutation>> elements;
  std::optional<std::unordered_map<Permutation, uint32_t, PermHash>> index;
  std::optional<std::vector<ConjugacyClass>> classes;
};

Group::Group(uint32_t degree) : Group(degree, {}) {}

Group::Group(uint32_t degree, std::vector<Permutation> generators)
    : data_(std::make_shared<Data>()) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
  for (const Permutation& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree does not match group degree");
  data_->degree = degree;
  data_->generators = std::move(generators);
}

uint32_t Group::degree() const { return data_->degree; }

const std::vector<Permutation>& Group::generators() const { return data_->generators; }

const StabilizerChain& Group::chain() const {
  std::lock_guard<std::mutex> guard(data_->lock);
  if (!data_->chain)
    data_->chain.emplace(data_->degree, data_->generators);
  return *data_->chain;
}

uint64_t Group::order() const { return chain().order(); }

bool Group::contains(const Permutation& p) const { return chain().contains(p); }

bool Group::is_abelian() const {
  const auto& gens = data_->generators;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].commutes_with(gens[j])) return false;
  return true;
}

const std::vector<Permutation>& Group::elements(const Caps& caps) const {
  uint64_t n = order();
  if (n > caps.enumeration)
    throw CapError("group order " + std::to_string(n) +
                   " exceeds the enumeration cap " + std::to_string(caps.enumeration));
  std::lock_guard<std::mutex> guard(data_->lock);
  if (!data_->elements) {
    std::vector<Permutation> elems;
    elems.reserve(n);
    data_->chain->for_each_element([&](const Permutation& p) { elems.push_back(p); });
    std::sort(elems.begin(), elems.end());
    data_->elements = std::move(elems);
  }
  return *data_->elements;
}

uint32_t Group::element_index(const Permutation& p, const Caps& caps) const {
  const auto& elems = elements(caps);
  std::lock_guard<std::mutex> guard(data_->lock);
  if (!data_->index) {
    std::unordered_map<Permutation, uint32_t, PermHash> idx;
    idx.reserve(elems.size() * 2);
    for (uint32_t i = 0; i < elems.size(); ++i) idx.emplace(elems[i], i);
    data_->index = std::move(idx);
  }
  auto it = data_->index->find(p);
  if (it == data_->index->end())
    throw std::invalid_argument("element is not a member of the group");
  return it->second;
}

const std::vector<Group::ConjugacyClass>& Group::conjugacy_classes(const Caps& caps) const {
  const auto& elems = elements(caps);
  element_index(elems[0], caps);  // make sure the index exists
  std::lock_guard<std::mutex> guard(data_->lock);
  if (!data_->classes) {
    const auto& idx = *data_->index;
    std::vector<ConjugacyClass> classes;
    std::vector<bool> seen(elems.size(), false);
    std::vector<uint32_t> queue;
    for (uint32_t i = 0; i < elems.size(); ++i) {
      if (seen[i]) continue;
      seen[i] = true;
      queue.assign(1, i);
      uint64_t size = 0;
      while (!queue.empty()) {
        uint32_t at = queue.back();
        queue.pop_back();
        ++size;
        for (const Permutation& g : data_->generators) {
          uint32_t to = idx.at(elems[at].conjugated_by(g));
          if (!seen[to]) {
            seen[to] = true;
            queue.push_back(to);
          }
        }
      }
      classes.push_back(ConjugacyClass{i, size});
    }
    data_->classes = std::move(classes);
  }
  return *data_->classes;
}

std::vector<Permutation> Group::conjugacy_class_reps(const Caps& caps) const {
  const auto& classes = conjugacy_classes(caps);
  const auto& elems = elements(caps);
  std::vector<Permutation> reps;
  reps.reserve(classes.size());
  for (const auto& c : classes) reps.push_back(elems[c.rep_index]);
  return reps;
}

std::vector<Permutation> reduce_generators(uint32_t degree,
                                           const std::vector<Permutation>& candidates) {
  std::vector<Permutation> kept;
  StabilizerChain chain(degree, {});
  for (const Permutation& c : candidates) {
    if (chain.contains(c)) continue;
    chain.insert_generator(c);
    kept.push_back(c);
  }
  return kept;
}

SubgroupRef::SubgroupRef(Group ambient, std::vector<Permutation> generators)
    : ambient_(std::move(ambient)),
      gens_(std::move(generators)),
      sub_(ambient_.degree(), gens_) {
  for (const Permutation& g : gens_)
    if (!ambient_.contains(g))
      throw std::invalid_argument("subgroup generator is not in the ambient group");
}

bool SubgroupRef::same_subgroup(const SubgroupRef& other) const {
  if (ambient_.degree() != other.ambient_.degree()) return false;
  if (order() != other.order()) return false;
  for (const Permutation& g : gens_)
    if (!other.contains(g)) return false;
  for (const Permutation& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool SubgroupRef::contains_subgroup(const SubgroupRef& other) const {
  for (const Permutation& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

Group direct_product(const Group& a, const Group& b) {
  uint32_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  gens.reserve(a.generators().size() + b.generators().size());
  for (const Permutation& g : a.generators()) {
    std::vector<uint32_t> images(da + db);
    for (uint32_t p = 0; p < da; ++p) images[p] = g[p];
    for (uint32_t p = da; p < da + db; ++p) images[p] = p;
    gens.emplace_back(std::move(images));
  }
  for (const Permutation& g : b.generators()) {
    std::vector<uint32_t> images(da + db);
    for (uint32_t p = 0; p < da; ++p) images[p] = p;
    for (uint32_t p = 0; p < db; ++p) images[da + p] = da + g[p];
    gens.emplace_back(std::move(images));
  }
  return Group(da + db, std::move(gens));
}

}  // namespace centra
