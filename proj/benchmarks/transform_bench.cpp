#include <benchmark/benchmark.h>

#include "cube_spectra/hypercube.hpp"
#include "cube_spectra/rng.hpp"

namespace {

cube::PointTable random_table(int n) {
  cube::Rng rng(1);
  return cube::PointTable::generate(n, [&](cube::Mask) { return rng.normal(); });
}

void BM_Analyze(benchmark::State& state) {
  const cube::PointTable f = random_table(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cube::analyze(f));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.size()));
}
BENCHMARK(BM_Analyze)->DenseRange(8, 20, 4);

void BM_Convolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cube::Spectrum f = cube::analyze(random_table(n));
  const cube::Spectrum g = cube::analyze(random_table(n));
  for (auto _ : state) benchmark::DoNotOptimize(cube::convolve(f, g));
}
BENCHMARK(BM_Convolve)->DenseRange(8, 20, 4);

void BM_RandomRestriction(benchmark::State& state) {
  const cube::Spectrum f = cube::homogeneous_part(cube::analyze(random_table(12)), 3);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cube::random_restriction(f, 3, seed++));
}
BENCHMARK(BM_RandomRestriction);

}  // namespace
