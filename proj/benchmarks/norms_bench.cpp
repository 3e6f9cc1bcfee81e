#include "isomlab/banach_mazur.hpp"
#include "isomlab/embedding.hpp"

#include <benchmark/benchmark.h>

using namespace isomlab;

namespace {

void BM_SphereNet(benchmark::State& state) {
  const auto norm = NormDescriptor::l2(static_cast<int>(state.range(0)));
  const double eps = state.range(0) == 2 ? 0.01 : 0.1;
  std::size_t size = 0;
  for (auto _ : state) size = sphere_net(norm, eps, 0).points.size();
  state.counters["points"] = static_cast<double>(size);
}

void BM_BanachMazur(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  BanachMazurOptions opt;
  opt.restarts = 4;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        banach_mazur_estimate(NormDescriptor::l2(dim), NormDescriptor::l1(dim), opt).value);
}

void BM_EmbedEquilateral(benchmark::State& state) {
  const auto s = equilateral_space(static_cast<int>(state.range(0)), 1.0);
  EmbeddingOptions opt;
  opt.restarts = 4;
  for (auto _ : state)
    benchmark::DoNotOptimize(embed_finite(s, NormDescriptor::l2(2), opt).residual);
}

}  // namespace

BENCHMARK(BM_SphereNet)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BanachMazur)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmbedEquilateral)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
