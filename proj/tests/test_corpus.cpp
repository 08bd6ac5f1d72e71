#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "centra/arith.hpp"
#include "centra/corpus.hpp"
#include "centra/errors.hpp"
#include "centra/group_io.hpp"
#include "centra/homomorphism.hpp"
#include "centra/layer.hpp"
#include "centra/subgroup_ops.hpp"

using namespace centra;

namespace {

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("CENTRA_FIXTURES");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("corpus annotations hold") {
  const auto& corpus = corpus_default();
  CHECK(corpus.size() >= 30);

  std::set<std::string> names;
  for (const CorpusEntry& entry : corpus) {
    CAPTURE(entry.name);
    CHECK(names.insert(entry.name).second);
    CHECK(entry.group.order() == entry.order);
    CHECK(is_soluble(entry.group) == entry.soluble);
    CHECK(is_simple(entry.group) == entry.simple);
  }

  CHECK(corpus_entry("A5").group.same_handle(corpus_entry("A5").group));
  CHECK(corpus_entry("M11").order == 7920);
  CHECK_THROWS_AS(corpus_entry("Monster"), std::out_of_range);
}

TEST_CASE("split extension entries record their pieces") {
  for (const char* name : {"3:2", "3^2:2^2", "2^2:3"}) {
    CAPTURE(name);
    const CorpusEntry& entry = corpus_entry(name);
    REQUIRE(!entry.e_generators.empty());
    REQUIRE(!entry.q_generators.empty());
    Group e(entry.group.degree(), entry.e_generators);
    Group q(entry.group.degree(), entry.q_generators);
    CHECK(e.order() * q.order() == entry.order);
    CHECK(is_normal_subgroup(entry.group, q));
    for (const Permutation& p : entry.e_generators)
      CHECK(entry.group.contains(p));
  }
  CHECK(is_isomorphic_small(corpus_entry("3:2").group, make_symmetric(3)));
  CHECK(is_isomorphic_small(corpus_entry("2^2:3").group, make_alternating(4)));
}

TEST_CASE("symmetric, alternating, cyclic, dihedral, elementary abelian") {
  CHECK(make_symmetric(1).is_trivial());
  CHECK(make_alternating(2).is_trivial());
  CHECK(make_alternating(3).order() == 3);
  CHECK(make_cyclic(1).is_trivial());
  CHECK_THROWS_AS(make_symmetric(0), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclic(0), std::invalid_argument);
  CHECK_THROWS_AS(make_dihedral(2), std::invalid_argument);
  CHECK_THROWS_AS(make_elementary_abelian(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_elementary_abelian(2, 0), std::invalid_argument);

  uint64_t fact = 1;
  for (uint32_t n = 1; n <= 7; ++n) {
    fact *= n;
    CHECK(make_symmetric(n).order() == fact);
    if (n >= 3) CHECK(make_alternating(n).order() == fact / 2);
  }
  for (uint32_t n : {3u, 4u, 7u, 10u}) {
    Group d = make_dihedral(n);
    CHECK(d.order() == 2 * n);
    CHECK_FALSE(d.is_abelian());
  }
  Group ea = make_elementary_abelian(3, 3);
  CHECK(ea.order() == 27);
  CHECK(ea.is_abelian());
  for (const Permutation& g : ea.generators())
    CHECK((g * g * g).is_identity());
}

TEST_CASE("matrix group orders and degrees") {
  struct Case {
    uint32_t n, q;
    uint64_t gl;
  };
  for (Case c : {Case{2, 2, 6}, Case{2, 3, 48}, Case{2, 4, 180},
                 Case{2, 5, 480}, Case{2, 7, 2016}, Case{2, 8, 3528},
                 Case{2, 9, 5760}, Case{3, 2, 168}, Case{3, 3, 11232}}) {
    CAPTURE(c.n);
    CAPTURE(c.q);
    Group gl = make_gl(c.n, c.q);
    CHECK(gl.order() == c.gl);
    CHECK(gl.degree() == ipow(c.q, c.n) - 1);
    Group sl = make_sl(c.n, c.q);
    CHECK(sl.order() == c.gl / (c.q - 1));
    CHECK(is_normal_subgroup(gl, sl));
  }

  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    CAPTURE(q);
    Group psl = make_psl(2, q);
    CHECK(psl.degree() == q + 1);
    uint64_t order = uint64_t{q} * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
    CHECK(psl.order() == order);
    CHECK(is_simple(psl) == (q > 3));
  }
  CHECK(make_psl(3, 2).degree() == 7);
  CHECK(make_psl(3, 3).degree() == 13);
  CHECK(make_psl(3, 3).order() == 5616);

  CHECK(is_isomorphic_small(make_gl(2, 2), make_symmetric(3)));
  CHECK(is_isomorphic_small(make_psl(2, 2), make_symmetric(3)));
  CHECK(is_isomorphic_small(make_psl(2, 3), make_alternating(4)));
  CHECK(is_isomorphic_small(make_sl(2, 4), make_alternating(5)));

  CHECK(is_quasisimple(make_sl(2, 5)));
  CHECK_FALSE(is_quasisimple(make_sl(2, 3)));
  CHECK_FALSE(is_quasisimple(make_gl(3, 3)));

  CHECK_THROWS_AS(make_gl(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_gl(2, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_gl(2, 16), std::invalid_argument);  // no fixed GF(16)
  CHECK_THROWS_AS(make_sl(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_psl(8, 9), std::invalid_argument);  // degree too large
}

TEST_CASE("regular representation") {
  for (const char* name : {"C6", "S3", "Q8", "D10"}) {
    CAPTURE(name);
    const Group& g = corpus_entry(name).group;
    Group reg = regular_representation(g);
    CHECK(reg.degree() == g.order());
    CHECK(reg.order() == g.order());
    CHECK(is_isomorphic_small(reg, g));
  }
}

TEST_CASE("automorphism permutations conjugate the regular representation") {
  Group c5 = make_cyclic(5);
  Permutation a = c5.generators()[0];
  Group reg = regular_representation(c5);
  Permutation rho = reg.generators()[0];

  Permutation pi = automorphism_permutation(c5, {a * a});
  CHECK(rho.conjugated_by(pi) == rho * rho);
  Permutation inv = automorphism_permutation(c5, {a.inverse()});
  CHECK(rho.conjugated_by(inv) == rho.inverse());

  // Images must generate an automorphism, not merely a homomorphism.
  Group c4 = make_cyclic(4);
  Permutation b = c4.generators()[0];
  CHECK_THROWS_AS(automorphism_permutation(c4, {b * b}), std::invalid_argument);
  CHECK_THROWS_AS(automorphism_permutation(c4, {c4.identity()}),
                  std::invalid_argument);
  // And must satisfy the relations in the first place.
  Group klein = make_elementary_abelian(2, 2);
  CHECK_THROWS_AS(
      automorphism_permutation(klein, {klein.generators()[0], klein.identity()}),
      std::invalid_argument);
}

TEST_CASE("affine action validation") {
  Group c6 = regular_representation(make_cyclic(6));
  CHECK(make_affine_action(Group(6), c6).order() == 6);

  // Q must be regular.
  CHECK_THROWS_AS(make_affine_action(Group(3), make_symmetric(3)),
                  std::invalid_argument);
  Group intrans(4, {Permutation::parse_cycles(4, "(1 2)"),
                    Permutation::parse_cycles(4, "(3 4)")});
  CHECK_THROWS_AS(make_affine_action(Group(4), intrans), std::invalid_argument);

  // Degrees must agree.
  CHECK_THROWS_AS(make_affine_action(Group(3), c6), std::invalid_argument);

  // E must normalize Q.
  Group c4 = regular_representation(make_cyclic(4));
  Group swap2(4, {Permutation::parse_cycles(4, "(1 2)")});
  CHECK_THROWS_AS(make_affine_action(swap2, c4), std::invalid_argument);

  // E must intersect Q trivially.
  CHECK_THROWS_AS(make_affine_action(c4, c4), std::invalid_argument);
}

TEST_CASE("group file fixtures") {
  Group a5 = load_group(fixture("a5.grp"));
  CHECK(a5.degree() == 5);
  CHECK(a5.order() == 60);
  CHECK(is_simple(a5));

  Group q8 = load_group(fixture("q8.grp"));
  CHECK(q8.order() == 8);
  CHECK(is_isomorphic_small(q8, corpus_entry("Q8").group));

  try {
    load_group(fixture("bad_point.grp"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_group(fixture("no_such_file.grp")), std::exception);

  // Round trip through the text format.
  std::istringstream back(format_group(a5));
  Group again = read_group(back);
  CHECK(again.degree() == a5.degree());
  CHECK(again.order() == a5.order());
  CHECK(again.generators() == a5.generators());
}
