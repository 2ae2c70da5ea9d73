// Serial reference vs OpenMP kernel, side by side.

#include "puregaps/kummer_maximals.hpp"
#include "puregaps/pure_gaps.hpp"
#include "puregaps/rr_oracle.hpp"
#include "puregaps/semigroup.hpp"

#include <benchmark/benchmark.h>

using namespace puregaps;

namespace {

void BM_OracleScan(benchmark::State& state, bool parallel) {
  const auto c = new_kummer(5, 9);
  const auto places = first_places(3);
  for (auto _ : state) {
    auto s = parallel ? oracle_pure_gaps(c, places, 2 * c.genus())
                      : oracle_pure_gaps_serial(c, places, 2 * c.genus());
    benchmark::DoNotOptimize(s);
  }
}

void BM_MaximalScan(benchmark::State& state, bool parallel) {
  const auto c = new_kummer(5, 9);
  const auto places = first_places(3);
  for (auto _ : state) {
    auto s = parallel ? oracle_maximals_in_c_box(c, places, MaximalKind::relative)
                      : oracle_maximals_in_c_box_serial(c, places, MaximalKind::relative);
    benchmark::DoNotOptimize(s);
  }
}

void BM_GlbRoute(benchmark::State& state, bool parallel) {
  const auto c = new_kummer(5, 9);
  const TupleSet ls = lambda_star(c, 3);
  for (auto _ : state) {
    auto s = parallel ? pure_gaps_from_relative_maximals(ls, 3)
                      : pure_gaps_from_relative_maximals_serial(ls, 3);
    benchmark::DoNotOptimize(s);
  }
}

void BM_Count(benchmark::State& state, bool parallel) {
  const auto c = new_kummer(13, 400);
  for (auto _ : state) {
    auto v = parallel ? pure_gap_count(c, 6) : pure_gap_count_serial(c, 6);
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_OracleScan, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleScan, omp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MaximalScan, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MaximalScan, omp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GlbRoute, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GlbRoute, omp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Count, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Count, omp, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
