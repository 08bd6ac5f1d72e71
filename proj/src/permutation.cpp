#include "centra/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "centra/errors.hpp"

namespace centra {

Permutation Permutation::identity(uint32_t degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<uint32_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t img : images_) {
    if (img >= images_.size() || seen[img])
      throw std::invalid_argument("image table is not a permutation");
    seen[img] = true;
  }
}

bool Permutation::is_identity() const {
  for (uint32_t p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (uint32_t p = 0; p < images_.size(); ++p) out.images_[images_[p]] = p;
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Permutation out;
  out.images_.resize(images_.size());
  for (uint32_t p = 0; p < images_.size(); ++p) out.images_[p] = rhs.images_[images_[p]];
  return out;
}

uint64_t Permutation::order() const {
  uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t p = 0; p < images_.size(); ++p) {
    if (seen[p]) continue;
    uint64_t len = 0;
    for (uint32_t q = p; !seen[q]; q = images_[q]) {
      seen[q] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Permutation::commutes_with(const Permutation& rhs) const {
  for (uint32_t p = 0; p < images_.size(); ++p)
    if (rhs.images_[images_[p]] != images_[rhs.images_[p]]) return false;
  return true;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  // (g^-1 * x * g)[p] = g[x[g^-1[p]]]; computed without materializing g^-1.
  Permutation out;
  out.images_.resize(images_.size());
  for (uint32_t p = 0; p < images_.size(); ++p) out.images_[g.images_[p]] = g.images_[images_[p]];
  return out;
}

std::vector<std::vector<uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t p = 0; p < images_.size(); ++p) {
    if (seen[p] || images_[p] == p) {
      seen[p] = true;
      continue;
    }
    std::vector<uint32_t> cyc;
    for (uint32_t q = p; !seen[q]; q = images_[q]) {
      seen[q] = true;
      cyc.push_back(q + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::str() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycs) {
    os << '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::parse_cycles(uint32_t degree, const std::string& text) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number in cycle");
      uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw ParseError("point " + std::to_string(v) + " exceeds degree");
        ++i;
      }
      if (v == 0) throw ParseError("points are 1-based; 0 is not a point");
      uint32_t p = static_cast<uint32_t>(v - 1);
      if (used[p]) throw ParseError("point " + std::to_string(v) + " repeated across cycles");
      used[p] = true;
      cyc.push_back(p);
      skip_ws();
      if (i < text.size() && text[i] == ',') {  // tolerate comma separators
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    for (size_t k = 0; k + 1 < cyc.size(); ++k) images[cyc[k]] = cyc[k + 1];
    if (cyc.size() > 1) images[cyc.back()] = cyc.front();
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("empty permutation text; use \"()\" for the identity");
  return Permutation(std::move(images));
}

size_t Permutation::hash() const {
  // FNV-1a over the image words; stable across runs.
  uint64_t h = 1469598103934665603ull;
  for (uint32_t img : images_) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace centra
