#include "centra/kernels.hpp"

#include <algorithm>

#ifdef CENTRA_HAVE_OPENMP
#include <omp.h>
#endif

namespace centra::kernels {

Mode& mode() {
  static Mode m = Mode::Auto;
  return m;
}

bool parallel_available() {
#ifdef CENTRA_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

bool use_parallel(size_t work_items) {
  switch (mode()) {
    case Mode::Serial:
      return false;
    case Mode::Parallel:
      return parallel_available();
    case Mode::Auto:
      return parallel_available() && work_items >= 2048;
  }
  return false;
}

bool commutes_with_all(const Permutation& p, std::span<const Permutation> targets) {
  for (const Permutation& t : targets)
    if (!p.commutes_with(t)) return false;
  return true;
}

}  // namespace

std::vector<uint32_t> commuting_filter_serial(const std::vector<Permutation>& elems,
                                              std::span<const Permutation> targets) {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < elems.size(); ++i)
    if (commutes_with_all(elems[i], targets)) out.push_back(i);
  return out;
}

std::vector<uint32_t> commuting_filter_parallel(const std::vector<Permutation>& elems,
                                                std::span<const Permutation> targets) {
  std::vector<char> hit(elems.size(), 0);
  int64_t n = static_cast<int64_t>(elems.size());
#ifdef CENTRA_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int64_t i = 0; i < n; ++i)
    hit[i] = commutes_with_all(elems[i], targets) ? 1 : 0;
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < elems.size(); ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

std::vector<uint32_t> commuting_filter(const std::vector<Permutation>& elems,
                                       std::span<const Permutation> targets) {
  return use_parallel(elems.size() * (targets.size() + 1))
             ? commuting_filter_parallel(elems, targets)
             : commuting_filter_serial(elems, targets);
}

std::vector<std::vector<uint32_t>> centralizer_table_serial(
    const std::vector<Permutation>& elems) {
  size_t n = elems.size();
  std::vector<std::vector<uint32_t>> rows(n);
  for (uint32_t i = 0; i < n; ++i) {
    rows[i].push_back(i);  // every element commutes with itself
    for (uint32_t j = static_cast<uint32_t>(i) + 1; j < n; ++j)
      if (elems[i].commutes_with(elems[j])) {
        rows[i].push_back(j);
        rows[j].push_back(i);
      }
  }
  for (auto& row : rows) std::sort(row.begin(), row.end());
  return rows;
}

std::vector<std::vector<uint32_t>> centralizer_table_parallel(
    const std::vector<Permutation>& elems) {
  size_t n = elems.size();
  std::vector<std::vector<uint32_t>> rows(n);
  int64_t nn = static_cast<int64_t>(n);
#ifdef CENTRA_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (int64_t i = 0; i < nn; ++i) {
    auto& row = rows[i];
    for (uint32_t j = 0; j < n; ++j)
      if (elems[i].commutes_with(elems[j])) row.push_back(j);
  }
  return rows;
}

std::vector<std::vector<uint32_t>> centralizer_table(const std::vector<Permutation>& elems) {
  return use_parallel(elems.size() * elems.size())
             ? centralizer_table_parallel(elems)
             : centralizer_table_serial(elems);
}

std::vector<uint32_t> intersect_sorted(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_sorted(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void intersect_sweep_serial(const std::vector<std::vector<uint32_t>>& bases,
                            const std::vector<uint32_t>& probe,
                            std::vector<std::vector<uint32_t>>& out) {
  out.resize(bases.size());
  for (size_t k = 0; k < bases.size(); ++k) out[k] = intersect_sorted(probe, bases[k]);
}

void intersect_sweep_parallel(const std::vector<std::vector<uint32_t>>& bases,
                              const std::vector<uint32_t>& probe,
                              std::vector<std::vector<uint32_t>>& out) {
  out.resize(bases.size());
  int64_t n = static_cast<int64_t>(bases.size());
#ifdef CENTRA_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 32)
#endif
  for (int64_t k = 0; k < n; ++k) out[k] = intersect_sorted(probe, bases[k]);
}

void intersect_sweep(const std::vector<std::vector<uint32_t>>& bases,
                     const std::vector<uint32_t>& probe,
                     std::vector<std::vector<uint32_t>>& out) {
  if (use_parallel(bases.size() * 8))
    intersect_sweep_parallel(bases, probe, out);
  else
    intersect_sweep_serial(bases, probe, out);
}

}  // namespace centra::kernels
