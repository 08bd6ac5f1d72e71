#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

namespace centra {

// Formal product Π p^e_p over primes with exponents in {0, 1, 2, ...} ∪ {∞},
// restricted to finitely many nonzero exponents.  Positive integers embed via
// their factorization; divisibility, gcd and lcm extend pointwise.  Numbers
// with infinitely many prime divisors are outside this representation.
class SteinitzNumber {
public:
  // Infinite exponent marker; min/max against it behave like ∞.
  static constexpr uint32_t kInfinity = std::numeric_limits<uint32_t>::max();

  SteinitzNumber() = default;  // the number 1

  // Factorization of n; throws std::invalid_argument when n = 0.
  static SteinitzNumber from_natural(uint64_t n);

  // Accepts either a plain positive integer ("12") or a product of prime
  // powers ("2^3 * 5 * 7^inf").  Throws std::invalid_argument on malformed
  // input, non-prime bases, and repeated primes.
  static SteinitzNumber parse(const std::string& text);

  uint32_t exponent(uint64_t p) const;
  // e = 0 removes p from the support; throws std::invalid_argument unless p
  // is prime.
  void set_exponent(uint64_t p, uint32_t e);
  const std::map<uint64_t, uint32_t>& support() const { return support_; }

  bool is_one() const { return support_.empty(); }
  bool is_finite() const;
  // The embedded natural number, when finite and representable in 64 bits.
  std::optional<uint64_t> to_natural() const;

  // "1", "2^2 * 3", "2^inf * 7"; ascending primes, exponent 1 left implicit.
  std::string str() const;

  bool operator==(const SteinitzNumber&) const = default;

private:
  std::map<uint64_t, uint32_t> support_;
};

// m | n: every exponent of m is at most the matching exponent of n.
bool divides(const SteinitzNumber& m, const SteinitzNumber& n);
// Pointwise min / max of exponents.
SteinitzNumber gcd(const SteinitzNumber& m, const SteinitzNumber& n);
SteinitzNumber lcm(const SteinitzNumber& m, const SteinitzNumber& n);

// GF(q^m) ⊆ GF(q^n) ⇔ m | n.  Throws std::invalid_argument unless q is a
// prime power.
bool subfield_contains(uint64_t q, const SteinitzNumber& m,
                       const SteinitzNumber& n);

}  // namespace centra
