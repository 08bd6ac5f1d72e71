#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace centra {

// Prime factorization by trial division, ascending primes.  Adequate for
// group orders at library scale; not meant for cryptographic-size inputs.
inline std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2)
    if (n % p == 0) return false;
  return true;
}

// Number of prime divisors counted with multiplicity.
inline int big_omega(uint64_t n) {
  int total = 0;
  for (const auto& [p, e] : factorize(n)) total += e;
  return total;
}

inline std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

// Exponent of p in n.
inline int valuation(uint64_t n, uint64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline uint64_t ipow(uint64_t base, int exp) {
  uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace centra
