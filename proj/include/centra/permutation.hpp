#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace centra {

// A permutation of the points 1..n.  Images are stored 0-based; every
// function that talks to the outside world (cycle strings, the group file
// format) uses 1-based points.
//
// Composition is left-to-right: (a * b) means "apply a first, then b",
// i.e. (a * b)[p] = b[a[p]].
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(uint32_t degree);

  // Builds from a 0-based image table; throws std::invalid_argument if the
  // table is not a bijection or the degree is zero.
  explicit Permutation(std::vector<uint32_t> images);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  uint32_t operator[](uint32_t point0) const { return images_[point0]; }
  const std::vector<uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Permutation& rhs) const { return images_ != rhs.images_; }
  bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

  // Multiplicative order (lcm of cycle lengths).
  uint64_t order() const;

  bool commutes_with(const Permutation& rhs) const;

  // g^(-1) * (*this) * g
  Permutation conjugated_by(const Permutation& g) const;

  // Nontrivial cycles, 1-based, each rotated to start at its smallest point,
  // sorted by that point.  The identity yields an empty list.
  std::vector<std::vector<uint32_t>> cycles() const;

  // Cycle string such as "(1 2 3)(4 5)"; "()" for the identity.
  std::string str() const;

  // Parses disjoint cycles in 1-based notation, e.g. "(1 2)(3 4 5)".
  // Points outside 1..degree, repeats, or malformed syntax throw ParseError.
  static Permutation parse_cycles(uint32_t degree, const std::string& text);

  size_t hash() const;

private:
  std::vector<uint32_t> images_;
};

struct PermHash {
  size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace centra
