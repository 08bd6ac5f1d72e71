#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "centra/errors.hpp"
#include "centra/group.hpp"
#include "centra/homomorphism.hpp"
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

Group cyclic(uint32_t n) {
  std::vector<uint32_t> cyc(n);
  for (uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return Group(n, {Permutation(cyc)});
}

}  // namespace

TEST_CASE("sign map of S_4 onto C_2") {
  Group s4 = sym(4);
  Group c2 = cyclic(2);
  Permutation flip = Permutation::parse_cycles(2, "(1 2)");
  // 4-cycle is odd, transposition is odd
  Homomorphism sign(s4, c2, {flip, flip});
  CHECK(sign.apply(Permutation::parse_cycles(4, "(1 2)")) == flip);
  CHECK(sign.apply(Permutation::parse_cycles(4, "(1 2 3)")).is_identity());
  CHECK(sign.apply(Permutation::parse_cycles(4, "(1 2)(3 4)")).is_identity());
  CHECK(sign.apply(s4.identity()).is_identity());

  const Group& k = sign.kernel();
  CHECK(k.order() == 12);  // A_4
  CHECK(k.contains(Permutation::parse_cycles(4, "(1 2 3)")));
  CHECK_FALSE(k.contains(Permutation::parse_cycles(4, "(1 2)")));

  CHECK(sign.in_image(flip));
  Permutation pre = sign.preimage(flip);
  CHECK(sign.apply(pre) == flip);

  // every element maps to the parity of its cycle type
  for (const auto& e : s4.elements()) {
    size_t moved = 0, cycles = 0;
    auto cyc = e.cycles();
    for (const auto& c : cyc) {
      moved += c.size();
      ++cycles;
    }
    bool even = ((moved - cycles) % 2) == 0;
    CHECK(sign.apply(e).is_identity() == even);
  }
}

TEST_CASE("non-homomorphic generator images are rejected") {
  Group s4 = sym(4);
  Group c2 = cyclic(2);
  Permutation flip = Permutation::parse_cycles(2, "(1 2)");
  // sending the 4-cycle to the identity and (1 2) to the flip does not extend
  CHECK_THROWS_AS(Homomorphism(s4, c2, {Permutation::identity(2), flip}),
                  std::invalid_argument);
  // wrong image count
  CHECK_THROWS_AS(Homomorphism(s4, c2, {flip}), std::invalid_argument);
  // image outside codomain degree
  CHECK_THROWS_AS(Homomorphism(s4, c2, {Permutation::identity(3), Permutation::identity(3)}),
                  std::invalid_argument);
}

TEST_CASE("identity homomorphism") {
  Group s4 = sym(4);
  Homomorphism id = Homomorphism::identity(s4);
  Permutation x = Permutation::parse_cycles(4, "(1 4 2)");
  CHECK(id.apply(x) == x);
  CHECK(id.kernel().is_trivial());
  CHECK(id.preimage(x) == x);
  CHECK(id.image().order() == 24);
}

TEST_CASE("apply rejects non-members") {
  Group a4(4, {Permutation::parse_cycles(4, "(1 2 3)"),
               Permutation::parse_cycles(4, "(2 3 4)")});
  REQUIRE(a4.order() == 12);
  Homomorphism id = Homomorphism::identity(a4);
  CHECK_THROWS_AS(id.apply(Permutation::parse_cycles(4, "(1 2)")), std::invalid_argument);
  CHECK_THROWS_AS(id.apply(Permutation::identity(5)), std::invalid_argument);
}

TEST_CASE("quotient S_4 / V_4 is S_3") {
  Group s4 = sym(4);
  Group v4(4, {Permutation::parse_cycles(4, "(1 2)(3 4)"),
               Permutation::parse_cycles(4, "(1 3)(2 4)")});
  REQUIRE(is_normal_subgroup(s4, v4));
  Quotient q = quotient(s4, v4);
  CHECK(q.group.degree() == 6);
  CHECK(q.group.order() == 6);
  CHECK_FALSE(q.group.is_abelian());
  CHECK(q.projection.kernel().order() == 4);
  CHECK(is_isomorphic_small(q.group, sym(3)));
  // projection is onto and respects multiplication on a sample
  Permutation a = Permutation::parse_cycles(4, "(1 2 3 4)");
  Permutation b = Permutation::parse_cycles(4, "(1 2)");
  CHECK(q.projection.apply(a * b) == q.projection.apply(a) * q.projection.apply(b));
}

TEST_CASE("quotient S_4 / A_4 and S_4 / S_4") {
  Group s4 = sym(4);
  Group a4(4, {Permutation::parse_cycles(4, "(1 2 3)"),
               Permutation::parse_cycles(4, "(2 3 4)")});
  Quotient q = quotient(s4, a4);
  CHECK(q.group.order() == 2);
  CHECK(q.projection.apply(Permutation::parse_cycles(4, "(1 2)"))[0] == 1);

  Quotient whole = quotient(s4, s4);
  CHECK(whole.group.order() == 1);
  CHECK(whole.group.degree() == 1);
  CHECK(whole.projection.kernel().order() == 24);
}

TEST_CASE("quotient rejects non-normal subgroups and huge indexes") {
  Group s4 = sym(4);
  Group c2(4, {Permutation::parse_cycles(4, "(1 2)")});
  CHECK_THROWS_AS(quotient(s4, c2), std::invalid_argument);

  Group triv(4, {});
  Caps tight;
  tight.quotient_index = 10;
  CHECK_THROWS_AS(quotient(s4, triv, tight), CapError);
}

TEST_CASE("quotient by the trivial group is faithful") {
  Group s4 = sym(4);
  Group triv(4, {});
  Quotient q = quotient(s4, triv);
  CHECK(q.group.order() == 24);
  CHECK(q.group.degree() == 24);
  CHECK(q.projection.kernel().is_trivial());
}

TEST_CASE("large-kernel path matches small-kernel path") {
  Group s5 = sym(5);
  Group a5(5, {Permutation::parse_cycles(5, "(1 2 3)"),
               Permutation::parse_cycles(5, "(3 4 5)")});
  REQUIRE(a5.order() == 60);
  Caps small_path;   // defaults: kernel of order 60 counts as small
  Caps large_path;
  large_path.filter_order = 10;  // force the membership-test path
  Quotient qa = quotient(s5, a5, small_path);
  Quotient qb = quotient(s5, a5, large_path);
  CHECK(qa.group.order() == 2);
  CHECK(qb.group.order() == 2);
  // same action tables either way
  CHECK(qa.group.generators() == qb.group.generators());
}

TEST_CASE("kernel and preimage through a conjugation action") {
  // S_4 acting on its three Sylow 2-subgroups by conjugation ~ S_3 image.
  // Build the action on the three pairs of opposite transpositions instead:
  // the double transpositions (12)(34), (13)(24), (14)(23) are permuted by
  // conjugation; kernel is V_4, image is S_3.
  Group s4 = sym(4);
  std::vector<Permutation> dts{Permutation::parse_cycles(4, "(1 2)(3 4)"),
                               Permutation::parse_cycles(4, "(1 3)(2 4)"),
                               Permutation::parse_cycles(4, "(1 4)(2 3)")};
  std::vector<Permutation> images;
  for (const auto& s : s4.generators()) {
    std::vector<uint32_t> row(3);
    for (uint32_t i = 0; i < 3; ++i) {
      Permutation c = dts[i].conjugated_by(s);
      row[i] = static_cast<uint32_t>(std::find(dts.begin(), dts.end(), c) - dts.begin());
      REQUIRE(row[i] < 3);
    }
    images.push_back(Permutation(row));
  }
  Group s3 = sym(3);
  Homomorphism act(s4, s3, images);
  CHECK(act.kernel().order() == 4);
  CHECK(act.image().order() == 6);
  for (const auto& e : s3.elements()) {
    CHECK(act.in_image(e));
    CHECK(act.apply(act.preimage(e)) == e);
  }
}
