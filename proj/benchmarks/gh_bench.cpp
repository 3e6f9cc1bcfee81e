#include "isomlab/gromov_hausdorff.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace isomlab;

namespace {

FiniteMetricSpace random_space(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> w(0.5, 3.0);
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = w(rng);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  return validate_metric(d);
}

void BM_ExactMaps(benchmark::State& state) {
  const auto x = random_space(state.range(0), 1);
  const auto y = random_space(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(gh_exact_maps(x, y).value);
}

void BM_ExactCorrespondences(benchmark::State& state) {
  const auto x = random_space(state.range(0), 1);
  const auto y = random_space(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(gh_exact_correspondences(x, y).value);
}

void BM_BranchAndBound(benchmark::State& state) {
  const auto x = random_space(state.range(0), 1);
  const auto y = random_space(state.range(0), 2);
  BranchAndBoundOptions opt;
  opt.threads = static_cast<int>(state.range(1));
  std::int64_t nodes = 0;
  for (auto _ : state) {
    const auto r = gh_branch_and_bound(x, y, opt);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

}  // namespace

BENCHMARK(BM_ExactMaps)->DenseRange(2, 5);
BENCHMARK(BM_ExactCorrespondences)->DenseRange(2, 4);
BENCHMARK(BM_BranchAndBound)->ArgsProduct({{4, 6, 8, 10}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
