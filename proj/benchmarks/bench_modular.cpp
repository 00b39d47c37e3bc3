#include <benchmark/benchmark.h>

#include "modkit/modular.hpp"
#include "modkit/random.hpp"

using namespace modkit;

static void BM_RelativeModularClosedForm(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  Rng rng(3);
  const DensityMatrix phi = random_density(rng, d), omega = random_density(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(relative_modular_operator(phi, omega));
}
BENCHMARK(BM_RelativeModularClosedForm)->DenseRange(2, 8, 2);

static void BM_RelativeModularFromS(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  Rng rng(3);
  const DensityMatrix phi = random_density(rng, d), omega = random_density(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(relative_modular_operator_from_s(phi, omega));
}
BENCHMARK(BM_RelativeModularFromS)->DenseRange(2, 8, 2);

static void BM_ModularFlow(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  Rng rng(4);
  const DensityMatrix omega = random_density(rng, d);
  const ComplexMatrix a = random_gaussian(rng, d, d);
  for (auto _ : state) benchmark::DoNotOptimize(modular_flow(omega, a, 0.7));
}
BENCHMARK(BM_ModularFlow)->DenseRange(2, 8, 2);

static void BM_ConnesCocycle(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  Rng rng(5);
  const DensityMatrix phi = random_density(rng, d), omega = random_density(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(connes_cocycle(phi, omega, 0.7));
}
BENCHMARK(BM_ConnesCocycle)->DenseRange(2, 8, 2);
