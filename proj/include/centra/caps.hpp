#pragma once

#include <cstdint>

namespace centra {

// Resource limits threaded through the expensive operations.  The defaults
// suit desk-scale groups; CENTRA_CAPS (for example
// "enum=100000,quot=20000") overrides the first two process-wide.
struct Caps {
  // Maximum number of elements an enumeration may materialize.
  uint64_t enumeration = 100000;
  // Maximum index [G:N] a coset-action quotient may build.
  uint64_t quotient_index = 20000;
  // Hard ceiling on centralizer-lattice nodes; exceeding it is an error, not
  // a truncation.
  uint64_t lattice_nodes = 50000;
  // Largest order for which the isomorphism backtracker will run.
  uint64_t iso_order = 512;
  // Largest order fed to the exact subgroup-chain-length search.
  uint64_t chain_exact = 2000;
  // Above this order, centralizer/normalizer switch from element filtering
  // to backtrack search over the stabilizer chain.
  uint64_t filter_order = 10000;
};

// Process-wide defaults, parsed once from CENTRA_CAPS.
const Caps& default_caps();

// Parses a "key=value,key=value" cap spec (keys: enum, quot); throws
// ParseError on malformed input.  Exposed for tests and the CLI.
Caps parse_caps(const char* spec, Caps base = Caps{});

}  // namespace centra
