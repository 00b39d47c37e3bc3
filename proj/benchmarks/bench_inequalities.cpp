#include <benchmark/benchmark.h>

#include "modkit/inequalities.hpp"
#include "modkit/random.hpp"

using namespace modkit;

namespace {

struct Pair {
  ComplexMatrix a;
  ComplexMatrix b;
};

Pair make_pair(Eigen::Index d) {
  Rng rng(6);
  return {random_psd(rng, d), random_psd(rng, d, 1 + d / 2)};
}

}  // namespace

static void BM_NormSandwich(benchmark::State& state) {
  const Pair p = make_pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(norm_sandwich(p.a, p.b));
}
BENCHMARK(BM_NormSandwich)->RangeMultiplier(2)->Range(2, 16);

static void BM_PowersStormer(benchmark::State& state) {
  const Pair p = make_pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(powers_stormer(p.a, p.b));
}
BENCHMARK(BM_PowersStormer)->RangeMultiplier(2)->Range(2, 16);

static void BM_Ozawa(benchmark::State& state) {
  const Pair p = make_pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ozawa_s(p.a, p.b, 0.3));
}
BENCHMARK(BM_Ozawa)->RangeMultiplier(2)->Range(2, 16);

static void BM_OgataModular(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  Rng rng(7);
  const DensityMatrix phi1 = random_density(rng, d);
  const PositiveFunctional phi2(random_psd(rng, d, 1 + d / 2));
  for (auto _ : state) benchmark::DoNotOptimize(ogata_modular(phi1, phi2, 0.4));
}
BENCHMARK(BM_OgataModular)->DenseRange(2, 8, 2);

static void BM_HoaRational(benchmark::State& state) {
  const Pair p = make_pair(state.range(0));
  const MonotoneFunction f = MonotoneFunction::rational();
  for (auto _ : state) benchmark::DoNotOptimize(hoa_generalized(p.a, p.b, f));
}
BENCHMARK(BM_HoaRational)->RangeMultiplier(2)->Range(2, 16);

static void BM_Phillips(benchmark::State& state) {
  const Pair p = make_pair(state.range(0));
  const ComplexMatrix a = p.a + p.b;
  for (auto _ : state) benchmark::DoNotOptimize(phillips(a, p.b, 2.0));
}
BENCHMARK(BM_Phillips)->RangeMultiplier(2)->Range(2, 16);
