#include "centra/steinitz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "centra/arith.hpp"

namespace centra {

SteinitzNumber SteinitzNumber::from_natural(uint64_t n) {
  if (n == 0) throw std::invalid_argument("0 is not a Steinitz number");
  SteinitzNumber s;
  for (const auto& [p, e] : factorize(n))
    s.support_[p] = static_cast<uint32_t>(e);
  return s;
}

namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  throw std::invalid_argument("cannot parse Steinitz number '" + text +
                              "': " + why);
}

}  // namespace

SteinitzNumber SteinitzNumber::parse(const std::string& text) {
  // Unsigned extraction would wrap a leading minus into a huge value.
  if (text.find('-') != std::string::npos) bad(text, "negative input");
  if (text.find('^') == std::string::npos &&
      text.find('*') == std::string::npos &&
      text.find("inf") == std::string::npos) {
    std::istringstream in(text);
    uint64_t n = 0;
    std::string extra;
    if (!(in >> n) || (in >> extra)) bad(text, "expected a positive integer");
    return from_natural(n);
  }

  SteinitzNumber s;
  size_t terms_read = 0;
  std::string term;
  std::istringstream terms(text);
  while (std::getline(terms, term, '*')) {
    ++terms_read;
    std::istringstream in(term);
    uint64_t p = 0;
    if (!(in >> p)) bad(text, "expected a prime in '" + term + "'");
    if (!is_prime(p)) bad(text, std::to_string(p) + " is not prime");
    uint32_t e = 1;
    char caret = 0;
    if (in >> caret) {
      if (caret != '^') bad(text, "expected '^' in '" + term + "'");
      std::string exp;
      if (!(in >> exp)) bad(text, "missing exponent in '" + term + "'");
      if (exp == "inf") {
        e = kInfinity;
      } else {
        std::istringstream num(exp);
        uint64_t value = 0;
        char left = 0;
        if (!(num >> value) || (num >> left) || value == 0 || value >= kInfinity)
          bad(text, "bad exponent '" + exp + "'");
        e = static_cast<uint32_t>(value);
      }
      std::string extra;
      if (in >> extra) bad(text, "trailing '" + extra + "'");
    }
    if (s.support_.count(p)) bad(text, "prime " + std::to_string(p) + " repeated");
    s.support_[p] = e;
  }
  if (s.support_.empty()) bad(text, "empty product");
  // getline drops a trailing delimiter silently.
  size_t stars = static_cast<size_t>(std::count(text.begin(), text.end(), '*'));
  if (terms_read != stars + 1)
    bad(text, "dangling '*'");
  return s;
}

uint32_t SteinitzNumber::exponent(uint64_t p) const {
  auto at = support_.find(p);
  return at == support_.end() ? 0 : at->second;
}

void SteinitzNumber::set_exponent(uint64_t p, uint32_t e) {
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (e == 0)
    support_.erase(p);
  else
    support_[p] = e;
}

bool SteinitzNumber::is_finite() const {
  for (const auto& [p, e] : support_)
    if (e == kInfinity) return false;
  return true;
}

std::optional<uint64_t> SteinitzNumber::to_natural() const {
  uint64_t n = 1;
  for (const auto& [p, e] : support_) {
    if (e == kInfinity) return std::nullopt;
    for (uint32_t i = 0; i < e; ++i) {
      if (n > std::numeric_limits<uint64_t>::max() / p) return std::nullopt;
      n *= p;
    }
  }
  return n;
}

std::string SteinitzNumber::str() const {
  if (support_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : support_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
    if (e == kInfinity)
      out += "^inf";
    else if (e != 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

bool divides(const SteinitzNumber& m, const SteinitzNumber& n) {
  for (const auto& [p, e] : m.support())
    if (e > n.exponent(p)) return false;
  return true;
}

SteinitzNumber gcd(const SteinitzNumber& m, const SteinitzNumber& n) {
  SteinitzNumber out;
  for (const auto& [p, e] : m.support())
    out.set_exponent(p, std::min(e, n.exponent(p)));
  return out;
}

SteinitzNumber lcm(const SteinitzNumber& m, const SteinitzNumber& n) {
  SteinitzNumber out = m;
  for (const auto& [p, e] : n.support())
    out.set_exponent(p, std::max(e, m.exponent(p)));
  return out;
}

bool subfield_contains(uint64_t q, const SteinitzNumber& m,
                       const SteinitzNumber& n) {
  if (q < 2 || factorize(q).size() != 1)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return divides(m, n);
}

}  // namespace centra
