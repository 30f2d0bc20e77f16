#include <benchmark/benchmark.h>

#include "runcube/census.hpp"
#include "runcube/genfunc.hpp"
#include "runcube/graphs.hpp"

namespace {

using namespace runcube;

void BM_BuildFibonacciRun(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = FamilyGraph::build(Family::FibonacciRun, n);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_BuildFibonacciRun)->Arg(16)->Arg(20)->Arg(25);

void BM_CensusTopVertex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = FamilyGraph::build(Family::FibonacciRun, n);
  for (auto _ : state) {
    auto census = enumerate_topvertex(g);
    benchmark::DoNotOptimize(census.size());
  }
}
BENCHMARK(BM_CensusTopVertex)->Arg(12)->Arg(16);

void BM_CensusOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = FamilyGraph::build(Family::FibonacciRun, n);
  for (auto _ : state) {
    auto census = enumerate_oracle(g);
    benchmark::DoNotOptimize(census.size());
  }
}
BENCHMARK(BM_CensusOracle)->Arg(8)->Arg(10)->Arg(12);

void BM_CatalogExpand(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto series = catalog_expand(GfId::DistCubeFibRun, order);
    benchmark::DoNotOptimize(series.size());
  }
}
BENCHMARK(BM_CatalogExpand)->Arg(16)->Arg(32);

void BM_MonoidDcw(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto series = monoid_gf(letter_series(AlphabetId::Run, LetterStat::DownCoweight, order), order);
    benchmark::DoNotOptimize(series.size());
  }
}
BENCHMARK(BM_MonoidDcw)->Arg(12)->Arg(24);

void BM_BfsDistances(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = FamilyGraph::build(Family::FibonacciRun, n);
  for (auto _ : state) {
    auto dist = bfs_distances(g, BitWord::zeros(n));
    benchmark::DoNotOptimize(dist.size());
  }
}
BENCHMARK(BM_BfsDistances)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
