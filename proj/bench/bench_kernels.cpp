// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "hekise/confluence.hpp"
#include "hekise/enumerate.hpp"
#include "hekise/graph.hpp"

namespace {

using namespace hekise;

void BM_census_parallel(benchmark::State& state) {
  auto const g = make_gamma_n(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_elements(g));
  }
}

void BM_census_serial(benchmark::State& state) {
  auto const g = make_gamma_n(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_elements_serial(g));
  }
}

// Infinite monoid: the census runs to its element budget.
void BM_cycle_census_parallel(benchmark::State& state) {
  auto const g = make_cycle_n(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_elements(g, static_cast<std::size_t>(state.range(0))));
  }
}

void BM_cycle_census_serial(benchmark::State& state) {
  auto const g = make_cycle_n(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_elements_serial(g, static_cast<std::size_t>(state.range(0))));
  }
}

void BM_sweep_parallel(benchmark::State& state) {
  auto const g = make_gamma_n(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_all_words(g, static_cast<std::size_t>(state.range(0))));
  }
}

void BM_sweep_serial(benchmark::State& state) {
  auto const g = make_gamma_n(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_all_words_serial(g, static_cast<std::size_t>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_census_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_census_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_cycle_census_parallel)->Arg(3000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_cycle_census_serial)->Arg(3000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep_parallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sweep_serial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
