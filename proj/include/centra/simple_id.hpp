#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "centra/caps.hpp"
#include "centra/group.hpp"

namespace centra {

enum class SimpleKind { Cyclic, Alternating, Lie, Sporadic };

// Identity of a finite simple group together with the invariant lambda:
// the minimal (B,N)-pair rank over all Lie-type realizations, the degree
// for alternating groups without one, 1 for sporadic groups, 0 for cyclic.
struct SimpleFactorId {
  SimpleKind kind = SimpleKind::Cyclic;
  uint32_t degree = 0;    // alternating degree, or the prime for cyclic
  std::string family;     // Lie family tag ("A", "2A", "2B", "C") or sporadic name
  uint32_t subscript = 0; // Lie family subscript: A1, 2A2, C2, ...
  uint64_t q = 0;         // field size for Lie entries
  uint64_t order = 0;
  uint32_t lambda = 0;

  // Classical name: "C7", "Alt(8)", "PSL(2,7)", "PSU(3,3)", "Sz(8)",
  // "PSp(4,4)", "M11".
  std::string name() const;

  bool operator==(const SimpleFactorId&) const = default;
};

// Order-keyed table of the nonabelian simple groups of order at most 10^6.
// Text format, one record per line, `#` starts a comment:
//   <order> alternating <degree> <lambda>
//   <order> lie <family> <subscript> <q> <lambda>
//   <order> sporadic <name> <lambda>
//   ambig <order> element_order <k> <kind> <params...>
// The ambig record resolves an order shared by two groups: the group has an
// element of order k iff it is the named entry.  Parsing validates that every
// shared order carries exactly one such rule.
class RecognitionTable {
public:
  struct Disambiguator {
    uint64_t element_order = 0;
    SimpleFactorId choice;  // picked when an element of that order exists
  };

  // Compiled-in copy of data/simple_groups.tbl.
  static const RecognitionTable& builtin();
  // Both throw std::runtime_error naming the offending line.
  static RecognitionTable parse(const std::string& text);
  static RecognitionTable load(const std::string& path);

  // Candidates with the given order; null when the order is absent.
  const std::vector<SimpleFactorId>* candidates(uint64_t order) const;
  const Disambiguator* disambiguator(uint64_t order) const;
  size_t size() const;

private:
  std::map<uint64_t, std::vector<SimpleFactorId>> entries_;
  std::map<uint64_t, Disambiguator> rules_;
};

// Identifies a simple group by order lookup, using the table's element-order
// rule where the order alone is ambiguous.  Throws std::invalid_argument when
// g is not simple and std::out_of_range when the order is not in the table.
SimpleFactorId identify_simple(const Group& g, const Caps& caps = default_caps(),
                               const RecognitionTable& table = RecognitionTable::builtin());

// Strictly descending subnormal series g = T_0 > T_1 > ... > T_m = 1 with
// simple quotients, refined through minimal normal subgroups recursively.
std::vector<SubgroupRef> composition_series(const Group& g,
                                            const Caps& caps = default_caps());

// Identified composition factors, with multiplicity, ordered bottom-up along
// the series computed by composition_series.
std::vector<SimpleFactorId> composition_factors(
    const Group& g, const Caps& caps = default_caps(),
    const RecognitionTable& table = RecognitionTable::builtin());

// Sum of lambda over the nonabelian composition factors.
uint32_t lambda_invariant(const Group& g, const Caps& caps = default_caps(),
                          const RecognitionTable& table = RecognitionTable::builtin());

}  // namespace centra
