#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/exact.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"
#include "chroma/rng.hpp"

namespace chroma {

enum class Algorithm { HeatBath, HeatBathCluster };
std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& text);

struct ChainConfig {
  LatticeGraph graph;
  VertexSet domain;
  Pattern boundary;
  std::uint64_t seed = 0;
  long long sweeps = 0;
  long long burn_in = 0;
  long long thin = 1;
  Algorithm algorithm = Algorithm::HeatBath;
  bool random_scan = false;
  int chains = 1;
};

void validate_chain_config(const ChainConfig& cfg);

// Mutable chain state: colouring on the whole ambient (exterior frozen) and
// the allowed colours of every domain vertex.
struct ChainState {
  Coloring f;
  ColoringConstraint constraint;
  std::vector<VertexId> sites;  // domain vertices, ascending
};

// Pure P0 start on Λ, exterior extended in the P0 pattern. Chain k uses RNG stream k.
ChainState initial_state(const ChainConfig& cfg, int chain);

// Colours a heat-bath update at v may choose: allowed(v) minus neighbour colours.
ColorSet heat_bath_options(const LatticeGraph& g, const ChainState& s, VertexId v);
void heat_bath_update(const LatticeGraph& g, ChainState& s, VertexId v, Rng& rng);
void heat_bath_sweep(const LatticeGraph& g, ChainState& s, Rng& rng, bool random_scan = false);
// Kempe-type move: choose colours a != b, flip a uniform subset of the
// {a,b}-components of Λ that can be swapped. Returns the number flipped.
int cluster_step(const LatticeGraph& g, ChainState& s, Rng& rng);

struct OrderStats {
  int q = 0;
  std::vector<VertexId> sites;
  long long samples = 0;
  std::vector<double> violation_rate;               // per site
  std::vector<std::vector<double>> occupation;      // per site, q entries
  std::array<std::vector<double>, 2> parity_occupation;  // even/odd rows, q entries each
  double split_half_gap = 0;  // max over sites of |first-half rate - second-half rate|
};

OrderStats run_experiment(const ChainConfig& cfg);

// "vertex_id,violation_rate,c1,...,cq" followed by one row per site.
std::string stats_csv(const OrderStats& stats);

// Random-scan single-site heat-bath kernel restricted to `states` (all
// colourings of the constraint, in a fixed order).
std::vector<std::vector<double>> heat_bath_transition_matrix(const LatticeGraph& g, const ColoringConstraint& c,
                                                             const std::vector<Coloring>& states);

}  // namespace chroma
