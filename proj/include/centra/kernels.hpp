#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "centra/permutation.hpp"

namespace centra::kernels {

// Inner loops that sweep over whole element lists.  Each kernel has a serial
// reference implementation and an OpenMP variant; both produce identical,
// position-ordered output (parallel loops write into per-index slots, so
// scheduling cannot reorder results).  The serial forms are the correctness
// reference and stay in the test matrix.
enum class Mode { Auto, Serial, Parallel };

// Process-wide dispatch mode (Auto picks the parallel form for large inputs
// when OpenMP is compiled in).
Mode& mode();
bool parallel_available();

// Ascending indices i such that elems[i] commutes with every target.
std::vector<uint32_t> commuting_filter(const std::vector<Permutation>& elems,
                                       std::span<const Permutation> targets);
std::vector<uint32_t> commuting_filter_serial(const std::vector<Permutation>& elems,
                                              std::span<const Permutation> targets);
std::vector<uint32_t> commuting_filter_parallel(const std::vector<Permutation>& elems,
                                                std::span<const Permutation> targets);

// For each element, the ascending indices of the elements commuting with it
// (row i is the centralizer of elems[i] as an index set).
std::vector<std::vector<uint32_t>> centralizer_table(const std::vector<Permutation>& elems);
std::vector<std::vector<uint32_t>> centralizer_table_serial(const std::vector<Permutation>& elems);
std::vector<std::vector<uint32_t>> centralizer_table_parallel(const std::vector<Permutation>& elems);

// Intersects one sorted index set against many: out[k] = probe ∩ bases[k].
void intersect_sweep(const std::vector<std::vector<uint32_t>>& bases,
                     const std::vector<uint32_t>& probe,
                     std::vector<std::vector<uint32_t>>& out);
void intersect_sweep_serial(const std::vector<std::vector<uint32_t>>& bases,
                            const std::vector<uint32_t>& probe,
                            std::vector<std::vector<uint32_t>>& out);
void intersect_sweep_parallel(const std::vector<std::vector<uint32_t>>& bases,
                              const std::vector<uint32_t>& probe,
                              std::vector<std::vector<uint32_t>>& out);

// Sorted-set helpers shared by the lattice code.
std::vector<uint32_t> intersect_sorted(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
bool subset_sorted(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);

}  // namespace centra::kernels
