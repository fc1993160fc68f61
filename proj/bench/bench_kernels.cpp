// Parallel sweeps against their serial references.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "slinv/invariants.hpp"

using namespace slinv;

namespace {

/// One vertex with `loops` interleaved loops in pairs: genus loops/2.
CombinatorialMap bouquet(int loops) {
  std::vector<HalfEdge> rot;
  for (int p = 0; 2 * p + 1 < loops; ++p) {
    int a = 4 * p;
    rot.insert(rot.end(), {a, a + 2, a + 1, a + 3});
  }
  if (loops % 2 == 1) rot.insert(rot.end(), {2 * loops - 2, 2 * loops - 1});
  std::vector<std::array<HalfEdge, 2>> es;
  for (int e = 0; e < loops; ++e) es.push_back({2 * e, 2 * e + 1});
  return CombinatorialMap::build({rot}, es);
}

void BM_Krushkal(benchmark::State& state) {
  CombinatorialMap g = bouquet(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(krushkal(g));
}

void BM_KrushkalReference(benchmark::State& state) {
  CombinatorialMap g = bouquet(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(krushkal_reference(g));
}

void BM_StateSum(benchmark::State& state) {
  SurfaceLinkDiagram d = medial_diagram(bouquet(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(jones_krushkal_statesum(d));
}

void BM_StateSumReference(benchmark::State& state) {
  SurfaceLinkDiagram d = medial_diagram(bouquet(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(jones_krushkal_statesum_reference(d));
}

}  // namespace

BENCHMARK(BM_Krushkal)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KrushkalReference)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StateSum)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StateSumReference)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
