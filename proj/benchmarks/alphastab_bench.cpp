#include <benchmark/benchmark.h>

#include <random>

#include "alphastab/edge_classifier.hpp"
#include "alphastab/enumeration.hpp"
#include "alphastab/generators.hpp"
#include "alphastab/matching.hpp"
#include "alphastab/oracle.hpp"
#include "alphastab/stability.hpp"

using namespace alphastab;

namespace {

// Bistable graph with extra cross chords, fixed per size.
Graph grown(int n) { return ear_growth(static_cast<std::uint64_t>(n), n).graph; }

void BM_MaximumMatching(benchmark::State& state) {
  const Graph g = grown(static_cast<int>(state.range(0)));
  const Bipartition b = require_bipartition(g);
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g, b));
  state.SetComplexityN(g.size());
}
BENCHMARK(BM_MaximumMatching)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_ClassifyEdges(benchmark::State& state) {
  const Graph g = grown(static_cast<int>(state.range(0)));
  const Bipartition b = require_bipartition(g);
  for (auto _ : state) benchmark::DoNotOptimize(classify_edges(g, b));
  state.SetComplexityN(g.size());
}
BENCHMARK(BM_ClassifyEdges)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_ClassifyByRematching(benchmark::State& state) {
  const Graph g = grown(static_cast<int>(state.range(0)));
  const Bipartition b = require_bipartition(g);
  for (auto _ : state) benchmark::DoNotOptimize(classify_edges_by_rematching(g, b));
}
BENCHMARK(BM_ClassifyByRematching)->RangeMultiplier(4)->Range(64, 1024);

// The full report lists an alternating cycle per vertex, so its size is
// quadratic on long cycles.
void BM_IsAlphaStable(benchmark::State& state) {
  const Graph g = even_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_alpha_stable(g));
}
BENCHMARK(BM_IsAlphaStable)->RangeMultiplier(4)->Range(64, 2048);

void BM_Verdicts(benchmark::State& state) {
  const Graph g = grown(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_alpha_minus(g));
    benchmark::DoNotOptimize(is_alpha_plus(g));
    benchmark::DoNotOptimize(is_bistable(g));
  }
}
BENCHMARK(BM_Verdicts)->RangeMultiplier(4)->Range(64, 16384)->Unit(benchmark::kMillisecond);

void BM_EnumerateConnectedBipartite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected_bipartite(n, [](const Graph&) {}));
}
BENCHMARK(BM_EnumerateConnectedBipartite)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_OracleAlpha(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const Graph g = sample_connected_bipartite(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_alpha(g));
}
BENCHMARK(BM_OracleAlpha)->DenseRange(8, 24, 4);

}  // namespace

BENCHMARK_MAIN();
