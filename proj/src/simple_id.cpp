#include "centra/simple_id.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "centra/arith.hpp"
#include "centra/homomorphism.hpp"
#include "centra/subgroup_ops.hpp"

namespace centra {

namespace {

const char kBuiltinTable[] =
#include "simple_groups_table.inc"
    ;

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
  throw std::runtime_error("recognition table line " + std::to_string(lineno) +
                           ": " + what);
}

// Reads `kind params...` into id, leaving order/lambda untouched.
bool read_kind(std::istringstream& in, SimpleFactorId& id) {
  std::string kind;
  if (!(in >> kind)) return false;
  if (kind == "cyclic") {
    id.kind = SimpleKind::Cyclic;
    return static_cast<bool>(in >> id.degree);
  }
  if (kind == "alternating") {
    id.kind = SimpleKind::Alternating;
    return static_cast<bool>(in >> id.degree);
  }
  if (kind == "lie") {
    id.kind = SimpleKind::Lie;
    return static_cast<bool>(in >> id.family >> id.subscript >> id.q);
  }
  if (kind == "sporadic") {
    id.kind = SimpleKind::Sporadic;
    return static_cast<bool>(in >> id.family);
  }
  return false;
}

bool same_group(const SimpleFactorId& a, const SimpleFactorId& b) {
  return a.kind == b.kind && a.degree == b.degree && a.family == b.family &&
         a.subscript == b.subscript && a.q == b.q;
}

}  // namespace

std::string SimpleFactorId::name() const {
  switch (kind) {
    case SimpleKind::Cyclic:
      return "C" + std::to_string(degree);
    case SimpleKind::Alternating:
      return "Alt(" + std::to_string(degree) + ")";
    case SimpleKind::Sporadic:
      return family;
    case SimpleKind::Lie:
      break;
  }
  std::string f = std::to_string(q);
  if (family == "A") return "PSL(" + std::to_string(subscript + 1) + "," + f + ")";
  if (family == "2A") return "PSU(" + std::to_string(subscript + 1) + "," + f + ")";
  if (family == "2B") return "Sz(" + f + ")";
  if (family == "C") return "PSp(" + std::to_string(2 * subscript) + "," + f + ")";
  return family + std::to_string(subscript) + "(" + f + ")";
}

const RecognitionTable& RecognitionTable::builtin() {
  static const RecognitionTable table = parse(kBuiltinTable);
  return table;
}

RecognitionTable RecognitionTable::parse(const std::string& text) {
  RecognitionTable t;
  struct RawRule {
    uint64_t order;
    Disambiguator rule;
    int lineno;
  };
  std::vector<RawRule> raw_rules;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank

    if (first == "ambig") {
      RawRule raw{0, {}, lineno};
      std::string rule_kind;
      if (!(fields >> raw.order >> rule_kind >> raw.rule.element_order))
        parse_fail(lineno, "malformed disambiguator");
      if (rule_kind != "element_order")
        parse_fail(lineno, "unknown disambiguation rule '" + rule_kind + "'");
      if (!read_kind(fields, raw.rule.choice))
        parse_fail(lineno, "malformed disambiguator target");
      raw_rules.push_back(std::move(raw));
      continue;
    }

    SimpleFactorId id;
    std::istringstream entry(line);
    if (!(entry >> id.order) || id.order < 2)
      parse_fail(lineno, "expected a group order, got '" + first + "'");
    if (!read_kind(entry, id))
      parse_fail(lineno, "malformed group description");
    if (!(entry >> id.lambda))
      parse_fail(lineno, "missing lambda value");
    std::string extra;
    if (entry >> extra) parse_fail(lineno, "trailing field '" + extra + "'");
    t.entries_[id.order].push_back(std::move(id));
  }

  for (const RawRule& raw : raw_rules) {
    auto at = t.entries_.find(raw.order);
    if (at == t.entries_.end())
      parse_fail(raw.lineno, "disambiguator for absent order " +
                                 std::to_string(raw.order));
    const SimpleFactorId* match = nullptr;
    for (const SimpleFactorId& c : at->second)
      if (same_group(c, raw.rule.choice)) {
        if (match) parse_fail(raw.lineno, "disambiguator target not unique");
        match = &c;
      }
    if (!match) parse_fail(raw.lineno, "disambiguator names no entry");
    Disambiguator full = raw.rule;
    full.choice = *match;
    if (!t.rules_.emplace(raw.order, std::move(full)).second)
      parse_fail(raw.lineno, "duplicate disambiguator");
  }
  for (const auto& [order, cands] : t.entries_) {
    if (cands.size() == 1) continue;
    if (cands.size() > 2)
      throw std::runtime_error("recognition table: order " +
                               std::to_string(order) +
                               " has more than two entries");
    if (!t.rules_.count(order))
      throw std::runtime_error("recognition table: shared order " +
                               std::to_string(order) + " has no disambiguator");
  }
  return t;
}

RecognitionTable RecognitionTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open recognition table " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

const std::vector<SimpleFactorId>* RecognitionTable::candidates(uint64_t order) const {
  auto at = entries_.find(order);
  return at == entries_.end() ? nullptr : &at->second;
}

const RecognitionTable::Disambiguator* RecognitionTable::disambiguator(
    uint64_t order) const {
  auto at = rules_.find(order);
  return at == rules_.end() ? nullptr : &at->second;
}

size_t RecognitionTable::size() const {
  size_t total = 0;
  for (const auto& [order, cands] : entries_) total += cands.size();
  return total;
}

SimpleFactorId identify_simple(const Group& g, const Caps& caps,
                               const RecognitionTable& table) {
  uint64_t n = g.order();
  if (g.is_abelian()) {
    if (!is_prime(n)) throw std::invalid_argument("group is not simple");
    SimpleFactorId id;
    id.kind = SimpleKind::Cyclic;
    id.degree = static_cast<uint32_t>(n);
    id.order = n;
    return id;
  }
  if (!is_simple(g, caps)) throw std::invalid_argument("group is not simple");
  const std::vector<SimpleFactorId>* cands = table.candidates(n);
  if (!cands)
    throw std::out_of_range("order " + std::to_string(n) +
                            " is not in the recognition table");
  if (cands->size() == 1) return cands->front();

  const RecognitionTable::Disambiguator* rule = table.disambiguator(n);
  bool present = false;
  for (const Permutation& rep : g.conjugacy_class_reps(caps))
    if (rep.order() == rule->element_order) {
      present = true;
      break;
    }
  if (present) return rule->choice;
  for (const SimpleFactorId& c : *cands)
    if (!same_group(c, rule->choice)) return c;
  throw std::logic_error("recognition table disambiguation failed");
}

namespace {

// Ascending chain of generator sets, terms[0] = {} generating the trivial
// subgroup, terms.back() generating the whole group, each step normal in the
// next with simple quotient; factors[i] is a group isomorphic to the step
// quotient terms[i+1]/terms[i].
struct Decomposition {
  std::vector<std::vector<Permutation>> terms{{}};
  std::vector<Group> factors;
};

// Extends d with the chain through a minimal normal subgroup m: one direct
// simple factor at a time when m is nonabelian, one generator at a time when
// m is elementary abelian.
void chain_through_minimal(const SubgroupRef& m, const Caps& caps,
                           Decomposition& d) {
  uint32_t degree = m.group().degree();
  if (m.group().is_abelian()) {
    std::vector<Permutation> cur = d.terms.back();
    uint64_t span = 1;
    for (const Permutation& w : m.generators()) {
      if (Group(degree, cur).contains(w)) continue;
      cur.push_back(w);
      uint64_t grown = Group(degree, cur).order();
      if (!is_prime(grown / span))
        throw std::logic_error("minimal normal subgroup is not elementary abelian");
      span = grown;
      d.terms.push_back(cur);
      d.factors.emplace_back(degree, std::vector<Permutation>{w});
    }
    return;
  }
  for (const SubgroupRef& s : minimal_normal_subgroups(m.group(), caps)) {
    std::vector<Permutation> cur = d.terms.back();
    for (const Permutation& w : s.generators()) cur.push_back(w);
    d.terms.push_back(std::move(cur));
    d.factors.emplace_back(degree, s.generators());
  }
}

Decomposition decompose(const Group& g, const Caps& caps) {
  Decomposition d;
  if (g.is_trivial()) return d;
  SubgroupRef m = minimal_normal_subgroups(g, caps).front();
  chain_through_minimal(m, caps, d);
  if (m.order() == g.order()) return d;

  Quotient q = quotient(g, m.group(), caps);
  Decomposition rest = decompose(q.group, caps);
  for (size_t i = 1; i < rest.terms.size(); ++i) {
    std::vector<Permutation> lifted = m.generators();
    for (const Permutation& w : rest.terms[i])
      lifted.push_back(q.projection.preimage(w));
    d.terms.push_back(std::move(lifted));
  }
  for (Group& f : rest.factors) d.factors.push_back(std::move(f));
  return d;
}

}  // namespace

std::vector<SubgroupRef> composition_series(const Group& g, const Caps& caps) {
  Decomposition d = decompose(g, caps);
  std::vector<SubgroupRef> series;
  for (auto at = d.terms.rbegin(); at != d.terms.rend(); ++at)
    series.emplace_back(g, *at);
  return series;
}

std::vector<SimpleFactorId> composition_factors(const Group& g, const Caps& caps,
                                                const RecognitionTable& table) {
  Decomposition d = decompose(g, caps);
  std::vector<SimpleFactorId> ids;
  ids.reserve(d.factors.size());
  for (const Group& f : d.factors) ids.push_back(identify_simple(f, caps, table));
  return ids;
}

uint32_t lambda_invariant(const Group& g, const Caps& caps,
                          const RecognitionTable& table) {
  uint32_t total = 0;
  for (const SimpleFactorId& id : composition_factors(g, caps, table))
    if (id.kind != SimpleKind::Cyclic) total += id.lambda;
  return total;
}

}  // namespace centra
