#include "lenscontact/farey_graph.hpp"
#include "lenscontact/linalg.hpp"
#include "lenscontact/surgery.hpp"
#include "lenscontact/sweep.hpp"
#include "lenscontact/tight_structures.hpp"

#include <benchmark/benchmark.h>

namespace lc = lenscontact;

namespace {

// Ratios of consecutive Fibonacci numbers: long chains, large integers.
std::pair<long long, long long> fibonacci_pair(int n) {
  long long a = 1, b = 2;
  for (int i = 0; i < n; ++i) {
    const long long c = a + b;
    a = b;
    b = c;
  }
  return {b, a};
}

void BM_GeodesicFibonacci(benchmark::State& state) {
  const auto [p, q] = fibonacci_pair(static_cast<int>(state.range(0)));
  const lc::ExtRat from(-p, q);
  for (auto _ : state) benchmark::DoNotOptimize(lc::geodesic(from, lc::ExtRat(0)));
  state.SetLabel("L(" + std::to_string(p) + "," + std::to_string(q) + ")");
}
BENCHMARK(BM_GeodesicFibonacci)->Arg(10)->Arg(40)->Arg(80);

void BM_GeodesicStaircase(benchmark::State& state) {
  const lc::ExtRat from(-state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lc::geodesic(from, lc::ExtRat(0)));
}
BENCHMARK(BM_GeodesicStaircase)->Arg(16)->Arg(256);

void BM_EnumerateTight(benchmark::State& state) {
  const lc::LensSpace lens(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lc::enumerate_tight(lens));
}
BENCHMARK(BM_EnumerateTight)->Args({30, 7})->Args({199, 3})->Args({181, 40});

void BM_RotSpectrum(benchmark::State& state) {
  const lc::LensSpace lens(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lc::rot_spectrum(lens, lc::Knot::kK1));
}
BENCHMARK(BM_RotSpectrum)->Args({30, 7})->Args({181, 40});

void BM_DeterminantChain(benchmark::State& state) {
  const auto [p, q] = fibonacci_pair(static_cast<int>(state.range(0)));
  const lc::IntMatrix m = lc::linking_matrix(lc::build_chain(lc::LensSpace(p, q), lc::Knot::kK1));
  for (auto _ : state) benchmark::DoNotOptimize(lc::determinant(m));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}
BENCHMARK(BM_DeterminantChain)->Arg(10)->Arg(40);

void BM_CheckSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lc::check_sweep(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CheckSweep)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
