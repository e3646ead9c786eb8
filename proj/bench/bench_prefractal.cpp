// Serial reference vs OpenMP kernels for the two prefractal constructions.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "digifrac/fractal.hpp"

namespace {

using digifrac::DigitSystem;

void BM_GenerateSerial(benchmark::State& state) {
  const DigitSystem sys(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int depth = static_cast<int>(state.range(2));
  for (auto _ : state) {
    auto p = digifrac::serial::generate(sys, depth);
    benchmark::DoNotOptimize(p);
  }
}

void BM_GenerateParallel(benchmark::State& state) {
  const DigitSystem sys(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int depth = static_cast<int>(state.range(2));
  for (auto _ : state) {
    auto p = digifrac::generate(sys, depth);
    benchmark::DoNotOptimize(p);
  }
}

void BM_DigitsSerial(benchmark::State& state) {
  const DigitSystem sys(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int depth = static_cast<int>(state.range(2));
  for (auto _ : state) {
    auto p = digifrac::serial::prefractal_by_digits(sys, depth);
    benchmark::DoNotOptimize(p);
  }
}

void BM_DigitsParallel(benchmark::State& state) {
  const DigitSystem sys(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const int depth = static_cast<int>(state.range(2));
  for (auto _ : state) {
    auto p = digifrac::prefractal_by_digits(sys, depth);
    benchmark::DoNotOptimize(p);
  }
}

// {m, b, depth}
BENCHMARK(BM_GenerateSerial)->Args({2, 0, 12})->Args({3, 1, 7})->Args({5, 2, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)->Args({2, 0, 12})->Args({3, 1, 7})->Args({5, 2, 5})->Unit(benchmark::kMillisecond);
// The serial digit route goes through big-integer numerals; keep it small.
BENCHMARK(BM_DigitsSerial)->Args({2, 0, 6})->Args({3, 1, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DigitsParallel)->Args({2, 0, 6})->Args({3, 1, 4})->Args({2, 0, 11})->Args({3, 1, 7})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
