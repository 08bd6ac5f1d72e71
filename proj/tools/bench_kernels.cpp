// Times the serial reference kernels against their OpenMP variants on the
// heavier corpus entries and checks that both produce identical output.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "centra/corpus.hpp"
#include "centra/group.hpp"
#include "centra/kernels.hpp"
#include "centra/permutation.hpp"

using namespace centra;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <typename Fn>
double timed(Fn&& fn) {
  auto t0 = clock_type::now();
  fn();
  return seconds_since(t0);
}

void bench_group(const std::string& name) {
  const Group& g = corpus_entry(name).group;
  Caps caps = default_caps();
  caps.enumeration = 1u << 20;
  const std::vector<Permutation>& elems = g.elements(caps);

  std::vector<uint32_t> serial_hits, parallel_hits;
  double t_filter_s = timed([&] {
    serial_hits = kernels::commuting_filter_serial(elems, g.generators());
  });
  double t_filter_p = timed([&] {
    parallel_hits = kernels::commuting_filter_parallel(elems, g.generators());
  });
  bool filter_ok = serial_hits == parallel_hits;

  std::vector<std::vector<uint32_t>> table_s, table_p;
  double t_table_s =
      timed([&] { table_s = kernels::centralizer_table_serial(elems); });
  double t_table_p =
      timed([&] { table_p = kernels::centralizer_table_parallel(elems); });
  bool table_ok = table_s == table_p;

  std::vector<std::vector<uint32_t>> sweep_s, sweep_p;
  double t_sweep_s = timed(
      [&] { kernels::intersect_sweep_serial(table_s, serial_hits, sweep_s); });
  double t_sweep_p = timed([&] {
    kernels::intersect_sweep_parallel(table_p, parallel_hits, sweep_p);
  });
  bool sweep_ok = sweep_s == sweep_p;

  std::printf("%-10s |G|=%-6llu", name.c_str(),
              static_cast<unsigned long long>(g.order()));
  std::printf("  filter %7.3fs/%7.3fs %s", t_filter_s, t_filter_p,
              filter_ok ? "ok" : "MISMATCH");
  std::printf("  table %7.3fs/%7.3fs %s", t_table_s, t_table_p,
              table_ok ? "ok" : "MISMATCH");
  std::printf("  sweep %7.3fs/%7.3fs %s\n", t_sweep_s, t_sweep_p,
              sweep_ok ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("kernel timings, serial/parallel (OpenMP %s)\n",
              kernels::parallel_available() ? "enabled" : "not compiled in");
  for (const char* name : {"S6", "PSL2_13", "SL2_5xC7", "A5xA5", "M11"})
    bench_group(name);
  return 0;
}
