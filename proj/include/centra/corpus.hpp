#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "centra/caps.hpp"
#include "centra/group.hpp"

namespace centra {

// Standard families in their natural representations.  All constructors
// throw std::invalid_argument on out-of-range parameters.
Group make_symmetric(uint32_t n);
Group make_alternating(uint32_t n);  // trivial for n < 3
Group make_cyclic(uint32_t n);
// Order 2n on n points; n >= 3.
Group make_dihedral(uint32_t n);
// C_p^k on k disjoint p-cycles.
Group make_elementary_abelian(uint64_t p, uint32_t k);

// Matrix groups over F_q as permutation groups: GL and SL act on the
// q^n - 1 nonzero row vectors, PSL on the (q^n-1)/(q-1) projective points.
// A vector is numbered big-endian by its coordinates as base-q digits
// (non-prime fields q in {4, 8, 9} use a fixed irreducible; coordinates are
// polynomial values 0..q-1); a projective point is numbered by enumeration
// order of its representative with first nonzero coordinate 1.
Group make_gl(uint32_t n, uint32_t q);
Group make_sl(uint32_t n, uint32_t q);
Group make_psl(uint32_t n, uint32_t q);

// Mathieu group on 11 points.
Group make_m11();

// Right regular representation of q on its own element indices.
Group regular_representation(const Group& q, const Caps& caps = default_caps());

// Permutation of q's element indices induced by the automorphism sending
// q's generators to `images`; throws std::invalid_argument when the
// assignment does not define an automorphism.
Permutation automorphism_permutation(const Group& q,
                                     const std::vector<Permutation>& images,
                                     const Caps& caps = default_caps());

// Q ⋊ E inside Sym(|Q|): q must be regular on the common domain and every
// generator of e must normalize it; the result has order |Q|·|E|.  Throws
// std::invalid_argument when e does not act as automorphisms or fails to
// complement q.
Group make_affine_action(const Group& e, const Group& q,
                         const Caps& caps = default_caps());

// A named test group with its expected facts; the expectations are checked
// against the constructed group when the corpus is built.
struct CorpusEntry {
  std::string name;
  std::string builder;  // construction recipe, e.g. "product(symmetric(4), alternating(5))"
  Group group;
  uint64_t order = 0;
  bool soluble = false;
  bool simple = false;
  // Set on the semidirect-product entries Q ⋊ E driving the
  // centralizer-series suite: generators of the complement and of the
  // normal regular subgroup, as elements of `group`.
  std::vector<Permutation> e_generators, q_generators;
};

// The built-in corpus, constructed once, in fixed order.
const std::vector<CorpusEntry>& corpus_default();
// Entry by name; throws std::out_of_range for unknown names.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace centra
