// Serial reference vs OpenMP kernels for the extremal search and the
// bipartite orientation sweep.

#include <benchmark/benchmark.h>

#include "irr/search.hpp"

namespace {

void BM_SearchSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(irr::max_irredundant_serial(n).f_value);
}

void BM_SearchOpenMP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(irr::max_irredundant(n).f_value);
}

void BM_SweepSerial(benchmark::State& state) {
  const auto a = static_cast<std::size_t>(state.range(0));
  const auto b = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(irr::verify_bipartite_simplicity_serial(a, b).irredundant_count);
}

void BM_SweepOpenMP(benchmark::State& state) {
  const auto a = static_cast<std::size_t>(state.range(0));
  const auto b = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(irr::verify_bipartite_simplicity(a, b).irredundant_count);
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchOpenMP)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOpenMP)->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
