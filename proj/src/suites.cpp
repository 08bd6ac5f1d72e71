#include "centra/suites.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "centra/arith.hpp"
#include "centra/bounds.hpp"
#include "centra/chain_length.hpp"
#include "centra/corpus.hpp"
#include "centra/errors.hpp"
#include "centra/homomorphism.hpp"
#include "centra/lattice.hpp"
#include "centra/layer.hpp"
#include "centra/subgroup_ops.hpp"

namespace centra {
namespace {

// Runs one check body, folding cap overruns into a skip and any other
// exception into a fail, so a suite always yields one report per planned
// check.  The body may overwrite the report wholesale (the bounds checks
// return complete reports); the names passed here win afterwards.
CheckReport guarded(const std::string& check, const std::string& group,
                    const std::function<void(CheckReport&)>& body) {
  CheckReport r;
  try {
    body(r);
  } catch (const CapError& e) {
    r.status = CheckStatus::Skipped;
    r.reason = e.what();
  } catch (const std::exception& e) {
    r.status = CheckStatus::Fail;
    r.note = e.what();
  }
  r.check_name = check;
  r.group_name = group;
  return r;
}

// G/R(G): G itself when the radical is trivial (a coset action would only
// rebuild a copy), nothing when G is soluble.
std::optional<Group> radical_quotient(const Group& g, const Caps& caps) {
  SubgroupRef rad = soluble_radical(g, caps);
  if (rad.order() == g.order()) return std::nullopt;
  if (rad.is_trivial()) return g;
  return quotient(g, rad.group(), caps).group;
}

SuiteResult suite_cdim_bounds(const Caps& caps, const RecognitionTable&) {
  SuiteResult out;
  out.suite = "cdim-bounds";

  auto term_bound = [&](const char* check, const std::string& name,
                        int64_t dim, int64_t bound) {
    out.reports.push_back(guarded(check, name, [&](CheckReport& r) {
      const Group& g = corpus_entry(name).group;
      int64_t terms = static_cast<int64_t>(cdim(g, caps).value_terms);
      r.inputs["dimension"] = dim;
      r.inputs["order"] = static_cast<int64_t>(g.order());
      r.computed["cdim_terms"] = terms;
      r.computed["bound_terms"] = bound;
      r.status = terms <= bound ? CheckStatus::Pass : CheckStatus::Fail;
      r.margin = bound - terms;
    }));
  };

  const std::pair<const char*, int64_t> gl_cases[] = {
      {"GL2_2", 2}, {"GL2_3", 2}, {"GL3_2", 3}};
  for (auto [name, n] : gl_cases)
    term_bound("gl_cdim_bound", name, n, n * n + 1);
  for (int64_t n = 3; n <= 7; ++n)
    term_bound("alt_cdim_bound", "A" + std::to_string(n), n, n * n + 1);
  for (int64_t q : {4, 5, 7, 8, 9, 11, 13})
    term_bound("psl2_cdim_bound", "PSL2_" + std::to_string(q), 2, 10);
  return out;
}

SuiteResult suite_structure(const Caps& caps, const RecognitionTable& table) {
  SuiteResult out;
  out.suite = "structure";
  for (const CorpusEntry& e : corpus_default()) {
    const Group& g = e.group;

    out.reports.push_back(
        guarded("socle_centralizer_trivial", e.name, [&](CheckReport& r) {
          std::optional<Group> bar = radical_quotient(g, caps);
          if (!bar) {
            r.status = CheckStatus::Skipped;
            r.reason = "trivial quotient";
            return;
          }
          SubgroupRef soc = socle(*bar, caps);
          SubgroupRef cent = centralizer(*bar, soc.generators(), caps);
          r.inputs["order"] = static_cast<int64_t>(g.order());
          r.inputs["quotient_order"] = static_cast<int64_t>(bar->order());
          r.computed["socle_order"] = static_cast<int64_t>(soc.order());
          r.computed["centralizer_order"] = static_cast<int64_t>(cent.order());
          r.status = cent.order() == 1 ? CheckStatus::Pass : CheckStatus::Fail;
        }));

    out.reports.push_back(
        guarded("socle_factors_identified", e.name, [&](CheckReport& r) {
          std::optional<Group> bar = radical_quotient(g, caps);
          if (!bar) {
            r.status = CheckStatus::Skipped;
            r.reason = "trivial quotient";
            return;
          }
          bool ok = true;
          int64_t factors = 0, lambda_socle = 0;
          uint64_t product = 1;
          for (const SubgroupRef& m : minimal_normal_subgroups(*bar, caps)) {
            for (const SubgroupRef& t :
                 minimal_normal_subgroups(m.group(), caps)) {
              if (is_prime(t.order()) || !is_simple(t.group(), caps)) {
                ok = false;
                continue;
              }
              SimpleFactorId id = identify_simple(t.group(), caps, table);
              lambda_socle += id.lambda;
              product *= t.order();
              ++factors;
            }
          }
          SubgroupRef soc = socle(*bar, caps);
          ok = ok && product == soc.order();
          r.inputs["order"] = static_cast<int64_t>(g.order());
          r.computed["socle_order"] = static_cast<int64_t>(soc.order());
          r.computed["simple_factors"] = factors;
          r.computed["lambda_socle"] = lambda_socle;
          r.computed["cdim_steps"] =
              static_cast<int64_t>(cdim(g, caps).value_steps);
          // The quotient above the socle is recorded as data only: at corpus
          // scale it is tiny, so its abelianness carries no verdict.
          int64_t socle_index =
              static_cast<int64_t>(bar->order() / soc.order());
          r.computed["socle_index"] = socle_index;
          r.computed["socle_quotient_abelian"] =
              socle_index == 1
                  ? 1
                  : (quotient(*bar, soc.group(), caps).group.is_abelian() ? 1
                                                                          : 0);
          r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        }));

    out.reports.push_back(guarded(
        "generalized_fitting_self_centralizing", e.name, [&](CheckReport& r) {
          SubgroupRef fstar = generalized_fitting(g, caps);
          SubgroupRef cent = centralizer(g, fstar.generators(), caps);
          SubgroupRef fit = fitting(g, caps);
          Group zf = center(fit.group(), caps);
          bool contained = fstar.contains_subgroup(cent);
          bool equals_center =
              cent.same_subgroup(SubgroupRef(g, zf.generators()));
          r.inputs["order"] = static_cast<int64_t>(g.order());
          r.computed["fstar_order"] = static_cast<int64_t>(fstar.order());
          r.computed["centralizer_order"] = static_cast<int64_t>(cent.order());
          r.computed["center_fitting_order"] =
              static_cast<int64_t>(zf.order());
          r.status = contained && equals_center ? CheckStatus::Pass
                                                : CheckStatus::Fail;
        }));
  }
  return out;
}

SuiteResult suite_radical_relations(const Caps& caps,
                                    const RecognitionTable& table) {
  SuiteResult out;
  out.suite = "radical-relations";
  for (const CorpusEntry& e : corpus_default()) {
    const Group& g = e.group;

    out.reports.push_back(
        guarded("radical_intersection", e.name, [&](CheckReport& r) {
          SubgroupRef rad = soluble_radical(g, caps);
          Group inter = g;
          int64_t primes = 0;
          for (uint64_t p : prime_divisors(g.order())) {
            SubgroupRef sp = p_soluble_radical(g, p, caps);
            inter = intersect_subgroups(inter, sp.group(), caps);
            ++primes;
          }
          r.inputs["order"] = static_cast<int64_t>(g.order());
          r.inputs["primes"] = primes;
          r.computed["radical_order"] = static_cast<int64_t>(rad.order());
          r.computed["intersection_order"] =
              static_cast<int64_t>(inter.order());
          SubgroupRef inter_ref(g, inter.generators());
          r.status = inter_ref.same_subgroup(rad) ? CheckStatus::Pass
                                                  : CheckStatus::Fail;
        }));

    out.reports.push_back(guarded("factor_count", e.name, [&](CheckReport& r) {
      r = check_factor_count(g, caps, table);
    }));

    std::vector<SubgroupRef> comps;
    try {
      comps = components(g, caps).components;
    } catch (const std::exception& e2) {
      CheckReport r;
      r.check_name = "indaut_lemma";
      r.group_name = e.name;
      if (dynamic_cast<const CapError*>(&e2)) {
        r.status = CheckStatus::Skipped;
        r.reason = e2.what();
      } else {
        r.status = CheckStatus::Fail;
        r.note = e2.what();
      }
      out.reports.push_back(r);
      continue;
    }
    for (size_t i = 0; i < comps.size(); ++i) {
      out.reports.push_back(
          guarded("indaut_lemma", e.name, [&](CheckReport& r) {
            r = check_indaut_lemma(g, comps[i], caps);
            r.inputs["component_index"] = static_cast<int64_t>(i);
            r.inputs["component_order"] =
                static_cast<int64_t>(comps[i].order());
          }));
    }
  }
  return out;
}

// All subgroups of a small group, as closures of generator subsets of size
// at most `rank`; adequate for the elementary abelian complements in the
// corpus.
std::vector<Group> small_subgroups(const Group& g, int rank, const Caps& caps) {
  const std::vector<Permutation>& elems = g.elements(caps);
  std::vector<Group> subs;
  std::set<std::vector<uint32_t>> seen;
  auto add = [&](const std::vector<Permutation>& gens) {
    Group s(g.degree(), gens);
    std::vector<uint32_t> key;  // element indices, ascending by construction
    for (const Permutation& p : s.elements(caps))
      key.push_back(g.element_index(p, caps));
    if (seen.insert(key).second) subs.push_back(std::move(s));
  };
  add({});
  std::vector<size_t> pick;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (!pick.empty()) {
      std::vector<Permutation> gens;
      for (size_t j : pick) gens.push_back(elems[j]);
      add(gens);
    }
    if (static_cast<int>(pick.size()) == rank) return;
    for (size_t j = from; j < elems.size(); ++j) {
      pick.push_back(j);
      rec(j + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return subs;
}

SuiteResult suite_khukhro(const Caps& caps, const RecognitionTable&) {
  SuiteResult out;
  out.suite = "khukhro";
  for (const CorpusEntry& e : corpus_default()) {
    if (e.e_generators.empty()) continue;
    out.reports.push_back(
        guarded("centralizer_series", e.name, [&](CheckReport& r) {
          const Group& g = e.group;
          Group eg(g.degree(), e.e_generators);
          Group qg(g.degree(), e.q_generators);
          r.inputs["order"] = static_cast<int64_t>(g.order());
          r.inputs["e_order"] = static_cast<int64_t>(eg.order());
          r.inputs["q_order"] = static_cast<int64_t>(qg.order());

          // C_E(Q) and the C_Q(S) below live inside the ambient group: the
          // direct centralizer call requires its targets to be members.
          Group fixed = intersect_subgroups(
              eg, centralizer(g, qg.generators(), caps).group(), caps);
          if (fixed.order() != 1) {
            r.status = CheckStatus::Fail;
            r.note = "complement does not act faithfully";
            return;
          }
          auto fac = factorize(eg.order());
          if (fac.size() != 1 || !eg.is_abelian()) {
            r.status = CheckStatus::Fail;
            r.note = "complement is not elementary abelian";
            return;
          }
          int rank = fac[0].second;
          r.computed["rank"] = rank;

          std::vector<Group> subs = small_subgroups(eg, rank, caps);
          std::vector<uint64_t> cq(subs.size());
          for (size_t i = 0; i < subs.size(); ++i)
            cq[i] = intersect_subgroups(
                        qg, centralizer(g, subs[i].generators(), caps).group(),
                        caps)
                        .order();

          // Chain E = S_0 > S_1 > … > S_rank = 1 with strictly growing
          // C_Q(S_i); depth-first over the subgroup containments.
          std::vector<size_t> chain;
          std::function<bool(size_t, int)> extend = [&](size_t at,
                                                        int depth) -> bool {
            chain.push_back(at);
            if (depth == rank) {
              if (subs[at].order() == 1) return true;
              chain.pop_back();
              return false;
            }
            for (size_t j = 0; j < subs.size(); ++j) {
              if (subs[j].order() >= subs[at].order()) continue;
              if (cq[j] <= cq[at]) continue;
              bool inside = true;
              for (const Permutation& p : subs[j].generators())
                if (!subs[at].contains(p)) {
                  inside = false;
                  break;
                }
              if (inside && extend(j, depth + 1)) return true;
            }
            chain.pop_back();
            return false;
          };
          size_t top = 0;
          while (subs[top].order() != eg.order()) ++top;
          bool found = extend(top, 0);
          r.computed["found"] = found ? 1 : 0;
          if (found) {
            std::string orders;
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
              if (!orders.empty()) orders += " < ";
              orders += std::to_string(cq[*it]);
            }
            r.note = "centralizer orders " + orders;
          }
          r.status = found ? CheckStatus::Pass : CheckStatus::Fail;
        }));
  }
  return out;
}

SuiteResult suite_finext(const Caps& caps, const RecognitionTable&) {
  SuiteResult out;
  out.suite = "finext";

  struct NormalPair {
    std::string name;
    const Group* g;
    SubgroupRef n;
  };
  std::vector<NormalPair> pairs;

  const Group& s4 = corpus_entry("S4").group;
  pairs.push_back({"S4/V4", &s4,
                   SubgroupRef(s4, {Permutation::parse_cycles(4, "(1 2)(3 4)"),
                                    Permutation::parse_cycles(4, "(1 3)(2 4)")})});
  pairs.push_back(
      {"S4/A4", &s4, SubgroupRef(s4, corpus_entry("A4").group.generators())});
  const Group& s5 = corpus_entry("S5").group;
  pairs.push_back(
      {"S5/A5", &s5, SubgroupRef(s5, corpus_entry("A5").group.generators())});
  const Group& sl25 = corpus_entry("SL2_5").group;
  pairs.push_back(
      {"SL2_5/Z", &sl25, SubgroupRef(sl25, center(sl25, caps).generators())});
  const Group& a5c6 = corpus_entry("A5xC6").group;
  pairs.push_back(
      {"A5xC6/C6", &a5c6,
       SubgroupRef(a5c6, {Permutation::parse_cycles(11, "(6 7 8 9 10 11)")})});
  for (const CorpusEntry& e : corpus_default()) {
    pairs.push_back({e.name + "/1", &e.group, SubgroupRef::trivial(e.group)});
    pairs.push_back(
        {e.name + "/" + e.name, &e.group, SubgroupRef::whole(e.group)});
  }

  for (const NormalPair& p : pairs) {
    out.reports.push_back(guarded("finext_bound", p.name, [&](CheckReport& r) {
      r = check_finext_bound(*p.g, p.n, caps);
    }));
    if (p.g->order() / p.n.order() <= 6)
      out.reports.push_back(guarded("dkr_bound", p.name, [&](CheckReport& r) {
        r = check_dkr_bound(*p.g, p.n, caps);
      }));
  }
  return out;
}

SuiteResult suite_theorem2_data(const Caps& caps,
                                const RecognitionTable& table) {
  SuiteResult out;
  out.suite = "theorem2-data";
  for (const CorpusEntry& e : corpus_default()) {
    out.reports.push_back(guarded("cdim_pair", e.name, [&](CheckReport& r) {
      const Group& g = e.group;
      SubgroupRef rad = soluble_radical(g, caps);
      int64_t k = static_cast<int64_t>(cdim(g, caps).value_steps);
      int64_t kbar = 0, lambda_socle_bar = 0;
      if (rad.order() == g.order()) {
        // soluble (including the trivial group): the quotient is trivial
      } else if (rad.is_trivial()) {
        kbar = k;
        lambda_socle_bar =
            static_cast<int64_t>(lambda_invariant(socle(g, caps).group(), caps, table));
      } else {
        Group bar = quotient(g, rad.group(), caps).group;
        kbar = static_cast<int64_t>(cdim(bar, caps).value_steps);
        lambda_socle_bar = static_cast<int64_t>(
            lambda_invariant(socle(bar, caps).group(), caps, table));
      }
      int64_t lam = static_cast<int64_t>(lambda_invariant(g, caps, table));
      ComponentSet cs = components(g, caps);
      int64_t lam_layer =
          cs.layer.is_trivial()
              ? 0
              : static_cast<int64_t>(
                    lambda_invariant(cs.layer.group(), caps, table));
      r.inputs["order"] = static_cast<int64_t>(g.order());
      r.computed["cdim_steps"] = k;
      r.computed["cdim_quotient_steps"] = kbar;
      r.computed["radical_order"] = static_cast<int64_t>(rad.order());
      r.computed["lambda"] = lam;
      r.computed["lambda_layer"] = lam_layer;
      r.computed["lambda_socle_quotient"] = lambda_socle_bar;
      bool ok = lam_layer <= lam && (!rad.is_trivial() || kbar == k);
      r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    }));
  }

  // Empirical maxima of λ(G)/cdim_steps and λ(E(G))/cdim_steps over the
  // entries above, compared by cross-multiplication to stay in integers.
  int64_t num = 0, den = 1, num_layer = 0, den_layer = 1;
  std::string at = "none", at_layer = "none";
  for (const CheckReport& r : out.reports) {
    auto k = r.computed.find("cdim_steps");
    if (k == r.computed.end() || k->second <= 0) continue;
    int64_t lam = r.computed.at("lambda");
    int64_t lam_layer = r.computed.at("lambda_layer");
    if (lam * den > num * k->second) {
      num = lam;
      den = k->second;
      at = r.group_name;
    }
    if (lam_layer * den_layer > num_layer * k->second) {
      num_layer = lam_layer;
      den_layer = k->second;
      at_layer = r.group_name;
    }
  }
  CheckReport m;
  m.check_name = "lambda_cdim_ratio_max";
  m.group_name = "corpus";
  m.computed["max_lambda"] = num;
  m.computed["at_cdim_steps"] = den;
  m.computed["max_lambda_layer"] = num_layer;
  m.computed["at_layer_cdim_steps"] = den_layer;
  m.note = "lambda/cdim peaks at " + at + "; lambda(E)/cdim peaks at " +
           at_layer;
  m.status = out.reports.empty() ? CheckStatus::Fail : CheckStatus::Pass;
  out.reports.push_back(m);
  return out;
}

using SuiteFn = SuiteResult (*)(const Caps&, const RecognitionTable&);
struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};
const std::array<SuiteEntry, 6> kSuites{{{"cdim-bounds", suite_cdim_bounds},
                                         {"structure", suite_structure},
                                         {"radical-relations",
                                          suite_radical_relations},
                                         {"khukhro", suite_khukhro},
                                         {"finext", suite_finext},
                                         {"theorem2-data",
                                          suite_theorem2_data}}};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const SuiteEntry& s : kSuites) names.emplace_back(s.name);
  return names;
}

SuiteResult run_suite(const std::string& name, const Caps& caps,
                      const RecognitionTable& table) {
  for (const SuiteEntry& s : kSuites)
    if (name == s.name) return s.fn(caps, table);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const Caps& caps,
                                        const RecognitionTable& table) {
  std::vector<SuiteResult> all;
  for (const SuiteEntry& s : kSuites) all.push_back(s.fn(caps, table));
  return all;
}

}  // namespace centra
