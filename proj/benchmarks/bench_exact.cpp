#include <benchmark/benchmark.h>

#include "chroma/exact.hpp"

using namespace chroma;

namespace {

LatticeGraph box(std::vector<int> dims) { return LatticeGraph(dims, std::vector<bool>(dims.size(), false)); }

void BM_Backtracking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LatticeGraph g = box({n, n});
  const ColoringConstraint c = pattern_boundary_constraint(g, g.all(), Pattern::parse("A=1;B=2,3", 3));
  for (auto _ : state) benchmark::DoNotOptimize(count_colorings(g, c).count);
}
BENCHMARK(BM_Backtracking)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Transfer(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const LatticeGraph g = box({3, 3, len});
  const ColoringConstraint c = free_constraint(g, g.all(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_count(g, c).count);
}
BENCHMARK(BM_Transfer)->Arg(5)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_Marginal(benchmark::State& state) {
  const LatticeGraph g = box({5, 5});
  const ColoringConstraint c = pattern_boundary_constraint(g, g.all(), Pattern::parse("A=1;B=2,3", 3));
  for (auto _ : state) benchmark::DoNotOptimize(exact_marginal(g, c, 12).distribution);
}
BENCHMARK(BM_Marginal)->Unit(benchmark::kMillisecond);

}  // namespace
