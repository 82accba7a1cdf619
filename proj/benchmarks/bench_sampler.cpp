#include <benchmark/benchmark.h>

#include "chroma/sampler.hpp"

using namespace chroma;

namespace {

ChainConfig config(int n, int q) {
  ChainConfig c;
  c.graph = LatticeGraph({n, n, n}, {false, false, false});
  c.domain = c.graph.all();
  c.boundary = dominant_class(q, 0).front();
  c.seed = 1;
  return c;
}

void BM_HeatBathSweep(benchmark::State& state) {
  const ChainConfig c = config(static_cast<int>(state.range(0)), 4);
  ChainState s = initial_state(c, 0);
  Rng rng(1);
  for (auto _ : state) heat_bath_sweep(c.graph, s, rng);
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(s.sites.size()));
}
BENCHMARK(BM_HeatBathSweep)->Arg(8)->Arg(16);

void BM_ClusterStep(benchmark::State& state) {
  const ChainConfig c = config(static_cast<int>(state.range(0)), 4);
  ChainState s = initial_state(c, 0);
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(cluster_step(c.graph, s, rng));
}
BENCHMARK(BM_ClusterStep)->Arg(8)->Arg(16);

}  // namespace
