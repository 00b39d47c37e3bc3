#include <benchmark/benchmark.h>

#include "modkit/random.hpp"
#include "modkit/superops.hpp"
#include "modkit/vec_ops.hpp"

using namespace modkit;

// Factored A X B* against the dense d^2 x d^2 Kronecker product.

static void BM_BoxTimesFactored(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  Rng rng(1);
  const BoxTimes op{random_gaussian(rng, d, d), random_gaussian(rng, d, d)};
  const ComplexMatrix x = random_gaussian(rng, d, d);
  for (auto _ : state) benchmark::DoNotOptimize(boxtimes_apply(op, x));
}
BENCHMARK(BM_BoxTimesFactored)->RangeMultiplier(2)->Range(2, 32);

static void BM_BoxTimesDense(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  Rng rng(1);
  const BoxTimes op{random_gaussian(rng, d, d), random_gaussian(rng, d, d)};
  const ComplexMatrix dense = op.to_dense();
  const BipartiteVector x = vec(random_gaussian(rng, d, d));
  for (auto _ : state) benchmark::DoNotOptimize(ComplexVector(dense * x.amplitudes));
}
BENCHMARK(BM_BoxTimesDense)->RangeMultiplier(2)->Range(2, 32);

static void BM_KronApplyVec(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  Rng rng(2);
  const ComplexMatrix a = random_gaussian(rng, d, d), b = random_gaussian(rng, d, d), x = random_gaussian(rng, d, d);
  for (auto _ : state) benchmark::DoNotOptimize(kron_apply_vec(a, b, x));
}
BENCHMARK(BM_KronApplyVec)->RangeMultiplier(2)->Range(2, 32);
