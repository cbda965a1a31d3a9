#include <benchmark/benchmark.h>

#include "gbg/complex.hpp"
#include "gbg/families.hpp"
#include "gbg/gog.hpp"
#include "gbg/homology.hpp"
#include "gbg/hyperplanes.hpp"

namespace {

using namespace gbg;

// Leaf subdivision of the H graph; 4 gives 24 vertices.
FiniteGraph h_graph(benchmark::State& state) { return families::gamma_h(static_cast<int>(state.range(0))); }

void BM_BuildUC(benchmark::State& state) {
  const FiniteGraph g = h_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_uc(g, 4));
}
BENCHMARK(BM_BuildUC)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Hyperplanes(benchmark::State& state) {
  const CubeComplex cc = build_uc(h_graph(state), 4);
  for (auto _ : state) benchmark::DoNotOptimize(hyperplanes(cc));
}
BENCHMARK(BM_Hyperplanes)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Propagation(benchmark::State& state) {
  const CubeComplex cc = build_uc(h_graph(state), 4);
  for (auto _ : state) benchmark::DoNotOptimize(propagation_classes(cc));
}
BENCHMARK(BM_Propagation)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const CubeComplex cc = build_uc(h_graph(state), 4);
  for (auto _ : state) benchmark::DoNotOptimize(homology(cc));
}
BENCHMARK(BM_Homology)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const FiniteGraph g = h_graph(state);
  const EdgeId mid = g.edge_between("x", "y");
  for (auto _ : state) benchmark::DoNotOptimize(assemble(decompose(g, 4, {mid})));
}
BENCHMARK(BM_Decompose)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
