// Serial reference vs OpenMP kernels, plus the two per-pair evaluation paths.

#include <benchmark/benchmark.h>

#include "chern/fiber_sum.hpp"
#include "chern/search.hpp"
#include "chern/sweep.hpp"

namespace {

using namespace chern;

const SweepGrid kGrid{{0, 5}, {-3, 8}, {-8, 16}};

SearchBounds wide_bounds() {
  SearchBounds b = default_search_bounds();
  b.elliptic_m = IntRange{1, 40};
  b.knot_k = IntRange{1, 20};
  b.knot_genus = IntRange{0, 10};
  b.generic = GenericGrid{{0, 10}, {-10, 40}, {0, 6}};
  return b;
}

void BM_ClosedForm(benchmark::State& state) {
  BlockData a{3, 5, 2}, b{7, -4, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(a);
    benchmark::DoNotOptimize(closed_form_triple(a, b));
  }
}
BENCHMARK(BM_ClosedForm);

void BM_OracleTriple(benchmark::State& state) {
  BlockData a{3, 5, 2}, b{7, -4, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(a);
    benchmark::DoNotOptimize(oracle_triple(a, b));
  }
}
BENCHMARK(BM_OracleTriple);

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_grid_serial(kGrid));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kGrid.pair_count()));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_grid(kGrid, threads));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kGrid.pair_count()));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SearchSerial(benchmark::State& state) {
  const auto bounds = wide_bounds();
  for (auto _ : state) benchmark::DoNotOptimize(search_realizations_serial({48, 0, 48}, bounds));
}
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  const auto bounds = wide_bounds();
  const SearchOptions options{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(search_realizations({48, 0, 48}, bounds, options));
}
BENCHMARK(BM_SearchParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
