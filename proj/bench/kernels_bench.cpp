// Parallel kernels against the serial reference implementations.
#include <benchmark/benchmark.h>

#include "coordsolve/async.hpp"
#include "coordsolve/core.hpp"
#include "coordsolve/kernels.hpp"
#include "coordsolve/reference.hpp"
#include "support.hpp"

using namespace coordsolve;
using namespace coordsolve::testing;

namespace {

StageGame threshold_game(int n) {
  Rng rng(7);
  return StageGame::aggregative(random_thresholds(rng, n));
}

StageGame monotone_game(int n) {
  Rng rng(11);
  return random_monotone_game(rng, n);
}

void BM_NeKernel(benchmark::State& state) {
  StageGame g = threshold_game(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_ne(g, Context::full(g.n())));
}

void BM_NeReference(benchmark::State& state) {
  StageGame g = threshold_game(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::ne_set(g, Context::full(g.n())));
}

void BM_SssKernel(benchmark::State& state) {
  StageGame g = threshold_game(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_sss(g, Context::full(g.n()), false));
}

void BM_SssReference(benchmark::State& state) {
  StageGame g = threshold_game(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::sss(g, Context::full(g.n()), false));
}

void BM_AssumptionsKernel(benchmark::State& state) {
  StageGame g = monotone_game(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sweep_assumptions(g));
}

void BM_AssumptionsReference(benchmark::State& state) {
  StageGame g = monotone_game(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_assumptions(g));
}

Partition halves(int n) {
  Partition p;
  p.cells = {PlayerSet::all(n / 2), PlayerSet::all(n) - PlayerSet::all(n / 2)};
  return p;
}

void BM_IesedsKernel(benchmark::State& state) {
  StageGame g = threshold_game(static_cast<int>(state.range(0)));
  Partition p = halves(g.n());
  for (auto _ : state) benchmark::DoNotOptimize(ieseds(g, p).profile);
}

void BM_IesedsReference(benchmark::State& state) {
  StageGame g = threshold_game(static_cast<int>(state.range(0)));
  Partition p = halves(g.n());
  for (auto _ : state) benchmark::DoNotOptimize(reference::ieseds_profile(g, p));
}

// Two candidate in-sets per player on a random digraph.
std::vector<std::vector<PlayerSet>> product_choices(int n) {
  Rng rng(13);
  Digraph a = random_digraph(rng, n, 0.4);
  Digraph b = random_digraph(rng, n, 0.4);
  std::vector<std::vector<PlayerSet>> c(n);
  for (int i = 0; i < n; ++i) c[i] = {a.in(i), b.in(i)};
  return c;
}

void BM_ProductKernel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto c = product_choices(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::min_tree_depth_over_product(n, c, PlayerSet::all(n)));
}

void BM_ProductReference(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto c = product_choices(n);
  for (auto _ : state) benchmark::DoNotOptimize(reference::min_tree_depth_over_product(n, c, PlayerSet::all(n)));
}

}  // namespace

BENCHMARK(BM_NeKernel)->DenseRange(12, 18, 3)->UseRealTime();
BENCHMARK(BM_NeReference)->DenseRange(12, 18, 3)->UseRealTime();
BENCHMARK(BM_SssKernel)->DenseRange(10, 14, 2)->UseRealTime();
BENCHMARK(BM_SssReference)->DenseRange(10, 14, 2)->UseRealTime();
BENCHMARK(BM_AssumptionsKernel)->DenseRange(8, 10, 2)->UseRealTime();
BENCHMARK(BM_AssumptionsReference)->DenseRange(8, 10, 2)->UseRealTime();
BENCHMARK(BM_IesedsKernel)->DenseRange(8, 14, 3)->UseRealTime();
BENCHMARK(BM_IesedsReference)->DenseRange(8, 14, 3)->UseRealTime();
BENCHMARK(BM_ProductKernel)->DenseRange(6, 8, 2)->UseRealTime();
BENCHMARK(BM_ProductReference)->DenseRange(6, 8, 2)->UseRealTime();

BENCHMARK_MAIN();
