#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "centra/steinitz.hpp"

using namespace centra;

namespace {

SteinitzNumber random_finite(std::mt19937& rng) {
  static const uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<uint32_t> exp_dist(0, 4);
  std::uniform_int_distribution<int> inf_dist(0, 9);
  SteinitzNumber n;
  for (uint64_t p : primes) {
    uint32_t e = exp_dist(rng);
    if (inf_dist(rng) == 0) e = SteinitzNumber::kInfinity;
    n.set_exponent(p, e);
  }
  return n;
}

}  // namespace

TEST_CASE("embedding naturals") {
  CHECK(SteinitzNumber::from_natural(1).is_one());
  CHECK(SteinitzNumber::from_natural(1).str() == "1");

  SteinitzNumber n = SteinitzNumber::from_natural(360);
  CHECK(n.exponent(2) == 3);
  CHECK(n.exponent(3) == 2);
  CHECK(n.exponent(5) == 1);
  CHECK(n.exponent(7) == 0);
  CHECK(n.str() == "2^3 * 3^2 * 5");
  CHECK(n.is_finite());
  CHECK(n.to_natural() == 360);

  CHECK_THROWS_AS(SteinitzNumber::from_natural(0), std::invalid_argument);

  // m | n on naturals agrees with integer divisibility.
  for (uint64_t a = 1; a <= 40; ++a)
    for (uint64_t b = 1; b <= 40; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(divides(SteinitzNumber::from_natural(a),
                    SteinitzNumber::from_natural(b)) == (b % a == 0));
    }
}

TEST_CASE("parsing and printing") {
  CHECK(SteinitzNumber::parse("1").is_one());
  CHECK(SteinitzNumber::parse("12") == SteinitzNumber::from_natural(12));
  CHECK(SteinitzNumber::parse("2^3 * 5 * 7^inf").str() == "2^3 * 5 * 7^inf");
  CHECK(SteinitzNumber::parse("7^inf*5*2^3").str() == "2^3 * 5 * 7^inf");
  CHECK(SteinitzNumber::parse("  3 ^ 2 ").exponent(3) == 2);
  CHECK(SteinitzNumber::parse("2^inf").is_finite() == false);
  CHECK(SteinitzNumber::parse("2^inf").to_natural() == std::nullopt);

  // Round trips.
  for (const char* text : {"1", "2", "2^2 * 3", "2^inf * 7", "3 * 5^inf * 11"})
    CHECK(SteinitzNumber::parse(text).str() == text);

  CHECK_THROWS_AS(SteinitzNumber::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("-12"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("4^2"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("2^0"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("2^"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("2^3j"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("2 * 2"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("2 *"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("* 2"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("inf"), std::invalid_argument);
  CHECK_THROWS_AS(SteinitzNumber::parse("2^4294967295"), std::invalid_argument);
}

TEST_CASE("divisibility with infinite exponents") {
  SteinitzNumber two_inf = SteinitzNumber::parse("2^inf");
  for (uint32_t k = 0; k < 6; ++k) {
    SteinitzNumber m;
    m.set_exponent(2, k);
    CHECK(divides(m, two_inf));
    CHECK(divides(m, m));
  }
  CHECK(divides(two_inf, two_inf));
  CHECK_FALSE(divides(two_inf, SteinitzNumber::parse("2^100")));
  CHECK_FALSE(divides(SteinitzNumber::from_natural(5), two_inf));
  CHECK(divides(SteinitzNumber(), two_inf));

  SteinitzNumber mixed = SteinitzNumber::parse("2^inf * 3^2");
  CHECK(divides(SteinitzNumber::from_natural(72), mixed));
  CHECK_FALSE(divides(SteinitzNumber::from_natural(81), mixed));
}

TEST_CASE("gcd and lcm form a lattice") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 200; ++trial) {
    SteinitzNumber a = random_finite(rng), b = random_finite(rng),
                   c = random_finite(rng);
    SteinitzNumber g = gcd(a, b), l = lcm(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(a, l));
    CHECK(divides(b, l));
    CHECK(gcd(a, b) == gcd(b, a));
    CHECK(lcm(a, b) == lcm(b, a));
    // Absorption and idempotence.
    CHECK(gcd(a, lcm(a, b)) == a);
    CHECK(lcm(a, gcd(a, b)) == a);
    CHECK(gcd(a, a) == a);
    // Associativity.
    CHECK(gcd(gcd(a, b), c) == gcd(a, gcd(b, c)));
    CHECK(lcm(lcm(a, b), c) == lcm(a, lcm(b, c)));
  }

  // Finite values agree with integer gcd/lcm.
  SteinitzNumber a = SteinitzNumber::from_natural(84);
  SteinitzNumber b = SteinitzNumber::from_natural(90);
  CHECK(gcd(a, b).to_natural() == 6);
  CHECK(lcm(a, b).to_natural() == 1260);
}

TEST_CASE("locally finite field towers") {
  // GF(q^m) sits inside GF(q^n) exactly when m | n; the Steinitz number n
  // describes the union field.
  SteinitzNumber hall = SteinitzNumber::parse("2^inf * 3^inf * 5^inf");
  CHECK(subfield_contains(2, SteinitzNumber::from_natural(2), hall));
  CHECK(subfield_contains(2, SteinitzNumber::from_natural(720), hall));
  CHECK_FALSE(subfield_contains(2, SteinitzNumber::from_natural(7), hall));

  SteinitzNumber two_tower = SteinitzNumber::parse("2^inf");
  CHECK(subfield_contains(2, SteinitzNumber::from_natural(2), two_tower));
  CHECK(subfield_contains(2, SteinitzNumber::from_natural(4), two_tower));
  CHECK_FALSE(subfield_contains(2, SteinitzNumber::from_natural(3), two_tower));
  CHECK(subfield_contains(4, SteinitzNumber::from_natural(2), two_tower));
  CHECK(subfield_contains(9, SteinitzNumber::from_natural(8), two_tower));

  CHECK_THROWS_AS(subfield_contains(6, SteinitzNumber(), two_tower),
                  std::invalid_argument);
  CHECK_THROWS_AS(subfield_contains(1, SteinitzNumber(), two_tower),
                  std::invalid_argument);
  CHECK_THROWS_AS(subfield_contains(0, SteinitzNumber(), two_tower),
                  std::invalid_argument);
}

TEST_CASE("exponent editing") {
  SteinitzNumber n;
  n.set_exponent(5, 2);
  CHECK(n.exponent(5) == 2);
  CHECK(n.support().size() == 1);
  n.set_exponent(5, 0);
  CHECK(n.is_one());
  CHECK_THROWS_AS(n.set_exponent(6, 1), std::invalid_argument);

  SteinitzNumber big;
  big.set_exponent(2, 63);
  CHECK(big.to_natural() == (uint64_t{1} << 63));
  big.set_exponent(2, 64);
  CHECK(big.to_natural() == std::nullopt);  // overflows 64 bits
  CHECK(big.is_finite());
}
