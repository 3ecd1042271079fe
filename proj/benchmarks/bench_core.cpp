#include <benchmark/benchmark.h>

#include <random>

#include "balforest/generators.hpp"
#include "balforest/oracle.hpp"
#include "balforest/solver.hpp"

namespace {

using namespace balforest;

ColouredCompleteGraph colouring(int n) {
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  return random_colouring_with_red_count(n, pairs / 2, 42);
}

void BM_SwapDelta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = colouring(n);
  const auto f = make_forest({ForestKind::Random, n, std::max(2, n / 8), 1});
  const auto e = Embedding::identity(f, g);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (auto _ : state) {
    const Vertex u = pick(rng);
    const Vertex v = pick(rng);
    benchmark::DoNotOptimize(u == v ? 0 : e.swap_delta(u, v, f, g));
  }
}
BENCHMARK(BM_SwapDelta)->Arg(64)->Arg(512)->Arg(4096);

void BM_SubgraphSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = colouring(n);
  const auto f = make_forest({ForestKind::Random, n, std::max(2, n / 8), 1});
  const auto e = Embedding::identity(f, g);
  for (auto _ : state) benchmark::DoNotOptimize(subgraph_sum(g, e.map(), f));
}
BENCHMARK(BM_SubgraphSum)->Arg(64)->Arg(512)->Arg(4096);

void BM_Solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto kind = static_cast<ForestKind>(state.range(1));
  const auto g = colouring(n);
  const auto f = make_forest({kind, n, std::max(2, n / 8), 3});
  for (auto _ : state) benchmark::DoNotOptimize(solve(f, g).achieved);
}
BENCHMARK(BM_Solve)
    ->ArgsProduct({{32, 64, 128}, {static_cast<long>(ForestKind::Star), static_cast<long>(ForestKind::Path),
                                   static_cast<long>(ForestKind::Random)}})
    ->Unit(benchmark::kMillisecond);

void BM_OracleMin(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = colouring(n);
  const auto f = make_forest({ForestKind::Random, n, 3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_imbalance(f, g).value);
}
BENCHMARK(BM_OracleMin)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
