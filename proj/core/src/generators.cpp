#include "chroma/generators.hpp"

#include <algorithm>

#include "chroma/errors.hpp"
#include "chroma/sampler.hpp"

namespace chroma {

VertexSet random_connected_set(const LatticeGraph& g, std::size_t size, Rng& rng, const VertexSet& within) {
  const VertexSet region = within.ambient_size() == 0 ? g.all() : within;
  const auto pool = region.ids();
  if (pool.empty() || size == 0) return VertexSet(g.num_vertices());
  VertexSet out(g.num_vertices());
  std::vector<VertexId> frontier;
  auto add = [&](VertexId v) {
    out.insert(v);
    for (VertexId x : g.neighbors(v))
      if (region.contains(x) && !out.contains(x)) frontier.push_back(x);
  };
  add(pool[rng.below(pool.size())]);
  while (out.size() < size) {
    frontier.erase(std::remove_if(frontier.begin(), frontier.end(), [&](VertexId v) { return out.contains(v); }),
                   frontier.end());
    if (frontier.empty()) break;
    add(frontier[rng.below(frontier.size())]);
  }
  return out;
}

VertexSet random_regular_set(const LatticeGraph& g, Rng& rng, SetParity parity, double density, int margin) {
  const int inner = 1 - boundary_parity(parity);
  const auto dist = bfs_distances(g, g.face_layer());
  VertexSet core(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const bool far = dist[v] < 0 || dist[v] >= margin;
    if (g.parity(v) == inner && far && rng.unit() < density) core.insert(v);
  }
  VertexSet u = plus(g, core);
  // An inner-parity vertex all of whose neighbours lie in U would be isolated in U^c.
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.parity(v) != inner || u.contains(v)) continue;
    bool enclosed = true;
    for (VertexId x : g.neighbors(v)) enclosed = enclosed && u.contains(x);
    if (enclosed) u.insert(v);
  }
  if (!regularity_check(g, u, parity).regular) throw InvariantViolation("generated set is not regular");
  return u;
}

Coloring random_coloring(const LatticeGraph& g, const VertexSet& domain, const Pattern& p0, long long sweeps,
                         std::uint64_t seed) {
  ChainConfig cfg;
  cfg.graph = g;
  cfg.domain = domain;
  cfg.boundary = p0;
  cfg.seed = seed;
  ChainState s = initial_state(cfg, 0);
  Rng rng(seed, 1);
  for (long long i = 0; i < sweeps; ++i) heat_bath_sweep(g, s, rng);
  return s.f;
}

}  // namespace chroma
