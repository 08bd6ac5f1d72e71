#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "centra/group.hpp"
#include "centra/kernels.hpp"
#include "centra/lattice.hpp"
#include "centra/subgroup_ops.hpp"
#include "support/oracles.hpp"

using namespace centra;

namespace {

Group sym(uint32_t n) {
  if (n == 1) return Group(1, {});
  std::vector<uint32_t> cyc(n), swp(n);
  for (uint32_t i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    swp[i] = i;
  }
  swp[0] = 1;
  swp[1] = 0;
  return Group(n, {Permutation(cyc), Permutation(swp)});
}

Group alt(uint32_t n) {
  std::vector<uint32_t> three(n), rest(n);
  for (uint32_t i = 0; i < n; ++i) three[i] = rest[i] = i;
  three[0] = 1; three[1] = 2; three[2] = 0;
  if (n % 2 == 1) {
    for (uint32_t i = 2; i < n; ++i) rest[i] = 2 + (i - 2 + 1) % (n - 2);
  } else {
    for (uint32_t i = 1; i < n; ++i) rest[i] = 1 + (i - 1 + 1) % (n - 1);
  }
  return Group(n, {Permutation(three), Permutation(rest)});
}

Group cyclic(uint32_t n) {
  std::vector<uint32_t> cyc(n);
  for (uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return Group(n, {Permutation(cyc)});
}

Group quaternion8() {
  Permutation a = Permutation::parse_cycles(8, "(1 2 3 4)(5 8 7 6)");
  Permutation b = Permutation::parse_cycles(8, "(1 5 3 7)(2 6 4 8)");
  return Group(8, {a, b});
}

std::multiset<uint64_t> node_orders(const CentralizerLattice& lat) {
  std::multiset<uint64_t> out;
  for (size_t i = 0; i < lat.node_count(); ++i) out.insert(lat.node_order(i));
  return out;
}

}  // namespace

TEST_CASE("lattice shapes of small groups") {
  CentralizerLattice s3(sym(3));
  CHECK(node_orders(s3) == std::multiset<uint64_t>{6, 3, 2, 2, 2, 1});

  CentralizerLattice q8(quaternion8());
  CHECK(node_orders(q8) == std::multiset<uint64_t>{8, 4, 4, 4, 2});

  CentralizerLattice c12(cyclic(12));
  CHECK(c12.node_count() == 1);
  CHECK(c12.node_order(c12.top()) == 12);
}

TEST_CASE("lattice invariants: meet closure, top, center, defining sets") {
  for (const Group& g : {sym(3), sym(4), alt(4), quaternion8(), alt(5)}) {
    CAPTURE(g.order());
    CentralizerLattice lat(g);

    CHECK(lat.node_order(lat.top()) == g.order());
    CHECK(lat.defining_set(lat.top()).empty());

    // Z(G) appears as a node (it is the meet of all element centralizers).
    Group z = center(g);
    std::vector<uint32_t> z_fp;
    for (const Permutation& e : z.elements()) z_fp.push_back(g.element_index(e));
    std::sort(z_fp.begin(), z_fp.end());
    bool center_found = false;
    for (size_t i = 0; i < lat.node_count(); ++i)
      if (lat.node_elements(i) == z_fp) center_found = true;
    CHECK(center_found);

    // Meet closure: pairwise intersections are nodes.
    std::set<std::vector<uint32_t>> fp;
    for (size_t i = 0; i < lat.node_count(); ++i) fp.insert(lat.node_elements(i));
    for (size_t i = 0; i < lat.node_count(); ++i)
      for (size_t j = i + 1; j < lat.node_count(); ++j) {
        auto meet = kernels::intersect_sorted(lat.node_elements(i), lat.node_elements(j));
        CHECK(fp.count(meet) == 1);
      }

    // Every node is the centralizer of its stored defining set, and the
    // double centralizer C(C(S)) is again a node containing S.
    const auto& elems = g.elements();
    for (size_t i = 0; i < lat.node_count(); ++i) {
      std::vector<Permutation> s;
      for (uint32_t x : lat.defining_set(i)) s.push_back(elems[x]);
      SubgroupRef c = centralizer(g, s);
      CHECK(c.order() == lat.node_order(i));
      CHECK(c.same_subgroup(lat.node(i)));

      std::vector<Permutation> members;
      for (uint32_t x : lat.node_elements(i)) members.push_back(elems[x]);
      SubgroupRef cc = centralizer(g, members);
      std::vector<uint32_t> cc_fp;
      for (const Permutation& e : cc.group().elements()) cc_fp.push_back(g.element_index(e));
      std::sort(cc_fp.begin(), cc_fp.end());
      CHECK(fp.count(cc_fp) == 1);
      std::vector<uint32_t> defining = lat.defining_set(i);
      std::sort(defining.begin(), defining.end());
      CHECK(kernels::subset_sorted(defining, cc_fp));
    }
  }
}

TEST_CASE("covers have nothing strictly between") {
  for (const Group& g : {sym(4), quaternion8(), alt(5)}) {
    CentralizerLattice lat(g);
    for (const auto& [lo, up] : lat.covers()) {
      CHECK(lat.node_order(lo) < lat.node_order(up));
      CHECK(kernels::subset_sorted(lat.node_elements(lo), lat.node_elements(up)));
      for (size_t m = 0; m < lat.node_count(); ++m) {
        if (m == lo || m == up) continue;
        bool between =
            kernels::subset_sorted(lat.node_elements(lo), lat.node_elements(m)) &&
            kernels::subset_sorted(lat.node_elements(m), lat.node_elements(up)) &&
            lat.node_order(m) > lat.node_order(lo) &&
            lat.node_order(m) < lat.node_order(up);
        CHECK_FALSE(between);
      }
    }
  }
}

TEST_CASE("longest chain matches exhaustive DFS on small lattices") {
  for (const Group& g : {sym(3), sym(4), alt(4), alt(5), quaternion8(), cyclic(12)}) {
    CAPTURE(g.order());
    CentralizerLattice lat(g);
    REQUIRE(lat.node_count() <= 200);
    std::vector<std::vector<uint32_t>> below(lat.node_count());
    for (size_t i = 0; i < lat.node_count(); ++i)
      for (size_t j = 0; j < lat.node_count(); ++j)
        if (i != j && lat.node_elements(j).size() < lat.node_elements(i).size() &&
            kernels::subset_sorted(lat.node_elements(j), lat.node_elements(i)))
          below[i].push_back(static_cast<uint32_t>(j));
    CHECK(static_cast<size_t>(cdim(g).value_terms) ==
          oracles::longest_path_nodes_dfs(below));
  }
}

TEST_CASE("chain values of known groups") {
  CHECK(cdim(Group(1, {})).value_terms == 1);
  CHECK(cdim(cyclic(12)).value_terms == 1);
  CHECK(cdim(cyclic(12)).value_steps == 0);
  CHECK(cdim(sym(3)).value_terms == 3);
  CHECK(cdim(quaternion8()).value_terms == 3);
  CHECK(cdim(sym(4)).value_terms == 5);
  CHECK(cdim(alt(5)).value_terms == 3);
}

TEST_CASE("witness chains verify and rebuild the stated subgroups") {
  for (const Group& g : {sym(3), sym(4), alt(4), alt(5), quaternion8(), cyclic(6)}) {
    CAPTURE(g.order());
    CdimResult r = cdim(g);
    REQUIRE(r.chain.size() == static_cast<size_t>(r.value_terms));
    CHECK(r.chain.front().order() == g.order());
    CHECK(verify_witnesses(g, r));
  }
}

TEST_CASE("verify_witnesses rejects malformed and doctored results") {
  Group s4 = sym(4);
  CdimResult r = cdim(s4);

  CdimResult truncated = r;
  truncated.chain.pop_back();
  CHECK_THROWS_AS(verify_witnesses(s4, truncated), std::invalid_argument);

  CdimResult wrong = r;
  wrong.chain.back() = wrong.chain.front();  // no longer strictly descending
  CHECK_FALSE(verify_witnesses(s4, wrong));
}

TEST_CASE("chain length is monotone under subgroups") {
  Group s4 = sym(4);
  int whole = cdim(s4).value_terms;
  Group a4 = alt(4);
  Group d8(4, {Permutation::parse_cycles(4, "(1 2 3 4)"),
               Permutation::parse_cycles(4, "(1 3)")});
  Group v4(4, {Permutation::parse_cycles(4, "(1 2)(3 4)"),
               Permutation::parse_cycles(4, "(1 3)(2 4)")});
  CHECK(cdim(a4).value_terms <= whole);
  CHECK(cdim(d8).value_terms <= whole);
  CHECK(cdim(v4).value_terms <= whole);
}

TEST_CASE("direct products add chain steps") {
  Group s3 = sym(3);
  CHECK(cdim(direct_product(s3, s3)).value_terms ==
        2 * cdim(s3).value_terms - 1);
  CHECK(cdim(direct_product(cyclic(6), s3)).value_terms == cdim(s3).value_terms);
  Group s4 = sym(4);
  CHECK(cdim(direct_product(s4, s3)).value_terms ==
        cdim(s4).value_terms + cdim(s3).value_terms - 1);
}
