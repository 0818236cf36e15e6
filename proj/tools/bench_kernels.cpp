// Compares the serial reference implementations of the group-search kernels
// against their OpenMP versions: identical results, wall-clock side by side.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hopfjordan/standard_groups.hpp"
#include "hopfjordan/subgroup_search.hpp"

namespace {

using namespace hopfjordan;
using groupcore::FiniteGroup;

double time_ms(const std::function<void()>& fn, int repeats) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  for (int i = 0; i < repeats; ++i) fn();
  const auto t1 = clock::now();
  return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count() /
         repeats;
}

void bench_subset_scan(const char* name, const FiniteGroup& g, int repeats) {
  int serial_result = 0, parallel_result = 0;
  const double serial_ms =
      time_ms([&] { serial_result = groupcore::bruteforce_minimal_abelian_index_serial(g); },
              repeats);
  const double parallel_ms =
      time_ms([&] { parallel_result = groupcore::bruteforce_minimal_abelian_index(g); }, repeats);
  std::printf("subset scan   %-8s order %3d  index %d %s  serial %9.2f ms  omp %9.2f ms  x%.2f\n",
              name, g.order(), serial_result,
              serial_result == parallel_result ? "(match)" : "(MISMATCH!)", serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

void bench_lattice(const char* name, const FiniteGroup& g, int repeats) {
  size_t serial_count = 0, parallel_count = 0;
  const double serial_ms =
      time_ms([&] { serial_count = groupcore::all_subgroups_serial(g).size(); }, repeats);
  const double parallel_ms =
      time_ms([&] { parallel_count = groupcore::all_subgroups(g).size(); }, repeats);
  std::printf("lattice       %-8s order %3d  %4zu subgroups %s  serial %9.2f ms  omp %9.2f ms  x%.2f\n",
              name, g.order(), serial_count,
              serial_count == parallel_count ? "(match)" : "(MISMATCH!)", serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          table[static_cast<size_t>(idx(x1, y1))][static_cast<size_t>(idx(x2, y2))] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup::from_table(std::move(table), idx(a.identity(), b.identity()));
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif

  const FiniteGroup s4 = groupcore::make_s4();
  const FiniteGroup a4 = groupcore::make_a4();
  const FiniteGroup q8 = groupcore::make_q8();
  const FiniteGroup d12 = groupcore::make_dihedral(12);
  const FiniteGroup q8xc3 = direct_product(q8, groupcore::make_cyclic(3));

  bench_subset_scan("Q8", q8, 50);
  bench_subset_scan("A4", a4, 20);
  bench_subset_scan("S4", s4, 3);
  bench_subset_scan("D24", d12, 3);
  bench_subset_scan("Q8xC3", q8xc3, 3);

  bench_lattice("S4", s4, 10);
  bench_lattice("D24", d12, 10);
  bench_lattice("Q8xC3", q8xc3, 10);
  return 0;
}
