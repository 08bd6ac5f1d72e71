#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "centra/group.hpp"
#include "centra/kernels.hpp"
#include "support/oracles.hpp"

using namespace centra;

namespace {

Group sym(uint32_t n) {
  std::vector<uint32_t> cyc(n), swp(n);
  for (uint32_t i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    swp[i] = i;
  }
  swp[0] = 1;
  swp[1] = 0;
  return Group(n, {Permutation(cyc), Permutation(swp)});
}

}  // namespace

TEST_CASE("commuting_filter matches a direct scan, serial == parallel") {
  Group g = sym(5);
  const auto& elems = g.elements();
  std::vector<Permutation> targets{Permutation::parse_cycles(5, "(1 2 3)"),
                                   Permutation::parse_cycles(5, "(4 5)")};
  std::vector<uint32_t> direct;
  for (uint32_t i = 0; i < elems.size(); ++i) {
    bool ok = true;
    for (const auto& t : targets) ok = ok && elems[i].commutes_with(t);
    if (ok) direct.push_back(i);
  }
  auto serial = kernels::commuting_filter_serial(elems, targets);
  CHECK(serial == direct);
  if (kernels::parallel_available()) {
    auto parallel = kernels::commuting_filter_parallel(elems, targets);
    CHECK(parallel == serial);
  }
  // the filter of an empty target list is everything
  auto all = kernels::commuting_filter_serial(elems, {});
  CHECK(all.size() == elems.size());
}

TEST_CASE("centralizer_table rows are sorted centralizers, serial == parallel") {
  Group g = sym(4);
  const auto& elems = g.elements();
  auto table = kernels::centralizer_table_serial(elems);
  REQUIRE(table.size() == elems.size());
  uint64_t total = 0;
  for (uint32_t i = 0; i < elems.size(); ++i) {
    CHECK(std::is_sorted(table[i].begin(), table[i].end()));
    for (uint32_t j : table[i]) CHECK(elems[i].commutes_with(elems[j]));
    // |C(x)| * |class(x)| = |G|
    total += table[i].size();
  }
  // sum over x of |C(x)| = (#classes) * |G|
  CHECK(total == 5u * 24u);
  if (kernels::parallel_available()) {
    auto par = kernels::centralizer_table_parallel(elems);
    CHECK(par == table);
  }
}

TEST_CASE("intersect helpers") {
  std::vector<uint32_t> a{1, 3, 5, 7, 9};
  std::vector<uint32_t> b{3, 4, 5, 9, 10};
  CHECK(kernels::intersect_sorted(a, b) == std::vector<uint32_t>{3, 5, 9});
  CHECK(kernels::subset_sorted({3, 9}, a));
  CHECK_FALSE(kernels::subset_sorted({3, 4}, a));
  CHECK(kernels::subset_sorted({}, a));

  std::vector<std::vector<uint32_t>> bases{{0, 1, 2, 3}, {2, 3, 4}, {}, {1, 9}};
  std::vector<uint32_t> probe{1, 2, 9};
  std::vector<std::vector<uint32_t>> out_s, out_p;
  kernels::intersect_sweep_serial(bases, probe, out_s);
  REQUIRE(out_s.size() == 4);
  CHECK(out_s[0] == std::vector<uint32_t>{1, 2});
  CHECK(out_s[1] == std::vector<uint32_t>{2});
  CHECK(out_s[2].empty());
  CHECK(out_s[3] == std::vector<uint32_t>{1, 9});
  if (kernels::parallel_available()) {
    kernels::intersect_sweep_parallel(bases, probe, out_p);
    CHECK(out_p == out_s);
  }
}

TEST_CASE("mode dispatch honours forced modes") {
  Group g = sym(4);
  const auto& elems = g.elements();
  auto saved = kernels::mode();
  kernels::mode() = kernels::Mode::Serial;
  auto s = kernels::centralizer_table(elems);
  kernels::mode() = kernels::Mode::Parallel;
  auto p = kernels::centralizer_table(elems);
  kernels::mode() = saved;
  CHECK(s == p);
}
