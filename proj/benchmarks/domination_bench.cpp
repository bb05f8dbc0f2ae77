#include <benchmark/benchmark.h>

#include "diamdom/domination.hpp"
#include "diamdom/recognition.hpp"

namespace {

void BM_GammaExactPetersen(benchmark::State& state) {
  diamdom::Graph g = diamdom::graphs::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(diamdom::gamma_exact(g).gamma);
}
BENCHMARK(BM_GammaExactPetersen);

void BM_GammaExactCycle(benchmark::State& state) {
  diamdom::Graph g = diamdom::graphs::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diamdom::gamma_exact(g).gamma);
}
BENCHMARK(BM_GammaExactCycle)->DenseRange(20, 60, 20);

void BM_GammaLineDiam2(benchmark::State& state) {
  const auto a = static_cast<std::size_t>(state.range(0));
  diamdom::Graph l = diamdom::line_graph_of(diamdom::graphs::complete_bipartite(a, a)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(diamdom::gamma_line_diam2(l).gamma);
}
BENCHMARK(BM_GammaLineDiam2)->DenseRange(3, 6, 1);

}  // namespace
