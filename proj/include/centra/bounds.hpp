#pragma once

#include "centra/caps.hpp"
#include "centra/group.hpp"
#include "centra/reports.hpp"
#include "centra/simple_id.hpp"

namespace centra {

// Finite-extension bound: cdim_steps(G) ≤ (l+1)²(k+1) with k = cdim_steps(N)
// and l the subgroup-chain length of G/N, for N normal in G.  The same
// inequality under the terms-counting convention is recorded alongside; the
// pass/fail status follows the steps convention.  Throws
// std::invalid_argument when N is not normal.
CheckReport check_finext_bound(const Group& g, const SubgroupRef& n,
                               const Caps& caps = default_caps());

// Finite-index bound: cdim_steps(G) ≤ k(k(d+2)+2) with k = [G:H] and
// d = cdim_steps(H), for H ≤ G.  Throws std::invalid_argument when H is not
// a subgroup.
CheckReport check_dkr_bound(const Group& g, const SubgroupRef& h,
                            const Caps& caps = default_caps());

// Composition-factor count: #nonabelian factors < 5·cdim_steps(G).  Records
// λ(G) next to cdim_steps as an empirical data point; vacuously passes with
// a note when cdim_steps = 0.
CheckReport check_factor_count(const Group& g, const Caps& caps = default_caps(),
                               const RecognitionTable& table = RecognitionTable::builtin());

// Induced-automorphism invariance: |Aut_G(Q)| = |Aut_Ḡ(Q̄)| where Ḡ = G/R(G)
// and Q is a component of G, confirmed by an explicit isomorphism test when
// both orders are within caps.iso_order.  Throws std::invalid_argument when
// Q is not a component.
CheckReport check_indaut_lemma(const Group& g, const SubgroupRef& q,
                               const Caps& caps = default_caps());

}  // namespace centra
