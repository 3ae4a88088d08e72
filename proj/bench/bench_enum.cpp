// Serial reference against the OpenMP kernels on the same enumeration.
#include <benchmark/benchmark.h>

#include "orthocusp/enum3.hpp"

using namespace orthocusp;

namespace {

enum3::EnumSpec spec_for(const benchmark::State& state) {
  enum3::EnumSpec s;
  s.max_faces = static_cast<int>(state.range(0));
  s.num_cusps = static_cast<int>(state.range(1));
  s.filter = enum3::Filter::right_angled;
  return s;
}

void BM_serial(benchmark::State& state) {
  const auto spec = spec_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(enum3::enumerate_serial(spec));
}

void BM_parallel(benchmark::State& state) {
  const auto spec = spec_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(enum3::enumerate(spec));
}

void BM_triangulations_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enum3::triangulations(static_cast<int>(state.range(0)), false));
}

void BM_triangulations_parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enum3::triangulations(static_cast<int>(state.range(0)), true));
}

}  // namespace

BENCHMARK(BM_serial)->Args({10, 1})->Args({10, 2})->Args({11, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Args({10, 1})->Args({10, 2})->Args({11, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_triangulations_serial)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_triangulations_parallel)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
