#include <benchmark/benchmark.h>

#include "chroma/approx.hpp"
#include "chroma/decomposition.hpp"
#include "chroma/generators.hpp"

using namespace chroma;

namespace {

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LatticeGraph g({n, n, n}, {false, false, false});
  const Pattern p0 = Pattern::parse("A=1,2;B=3,4", 4);
  const Coloring f = random_coloring(g, g.all(), p0, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g, f).star);
}
BENCHMARK(BM_Decompose)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Breakup(benchmark::State& state) {
  const LatticeGraph g({8, 8, 8}, {false, false, false});
  const Pattern p0 = Pattern::parse("A=1,2;B=3,4", 4);
  const Coloring f = random_coloring(g, g.all(), p0, 5, 4);
  VertexSet v(g.num_vertices());
  v.insert(static_cast<VertexId>(g.num_vertices() / 2));
  for (auto _ : state) benchmark::DoNotOptimize(construct_breakup(g, f, v, g.all(), p0, 2).star);
}
BENCHMARK(BM_Breakup)->Unit(benchmark::kMillisecond);

void BM_SeparatingSet(benchmark::State& state) {
  const LatticeGraph g({12, 12, 12}, {false, false, false});
  Rng rng(5);
  const VertexSet s = random_regular_set(g, rng, SetParity::Odd, 0.2, 3);
  const OddSetCollection coll(g, {s});
  for (auto _ : state) benchmark::DoNotOptimize(separating_set(g, coll).separator);
}
BENCHMARK(BM_SeparatingSet)->Unit(benchmark::kMillisecond);

}  // namespace
