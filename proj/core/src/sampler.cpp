#include "chroma/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "chroma/errors.hpp"
#include "chroma/parallel.hpp"

namespace chroma {

std::string to_string(Algorithm a) { return a == Algorithm::HeatBath ? "heat-bath" : "heat-bath+cluster"; }

Algorithm parse_algorithm(const std::string& text) {
  if (text == "heat-bath") return Algorithm::HeatBath;
  if (text == "heat-bath+cluster" || text == "cluster") return Algorithm::HeatBathCluster;
  throw PreconditionError("unknown algorithm '" + text + "' (expected heat-bath or heat-bath+cluster)");
}

void validate_chain_config(const ChainConfig& cfg) {
  if (cfg.burn_in < 0) throw PreconditionError("burn_in must be >= 0");
  if (cfg.sweeps < cfg.burn_in) throw PreconditionError("sweeps must be >= burn_in");
  if (cfg.thin < 1) throw PreconditionError("thin must be >= 1");
  if (cfg.chains < 1) throw PreconditionError("chains must be >= 1");
  validate_boundary_condition(cfg.graph, {cfg.domain, cfg.boundary});
}

ChainState initial_state(const ChainConfig& cfg, int chain) {
  const auto& g = cfg.graph;
  std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(chain) + 1));
  BoundaryCondition bc{cfg.domain, cfg.boundary};
  Coloring inside = pure_pattern_sample(g, cfg.domain, cfg.boundary, seed);
  ChainState s{extend_outside(g, inside, bc, splitmix64(seed)), pattern_boundary_constraint(g, cfg.domain, cfg.boundary),
               cfg.domain.ids()};
  return s;
}

ColorSet heat_bath_options(const LatticeGraph& g, const ChainState& s, VertexId v) {
  return s.constraint.allowed[v] & ~neighbor_colors(g, s.f, v);
}

void heat_bath_update(const LatticeGraph& g, ChainState& s, VertexId v, Rng& rng) {
  ColorSet opts = heat_bath_options(g, s, v);
  if (!opts) throw InvariantViolation("heat-bath update found no admissible colour at vertex " + std::to_string(v));
  int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(color_count(opts))));
  for (int c = 1;; ++c) {
    if (!has_color(opts, c)) continue;
    if (k-- == 0) {
      s.f[v] = static_cast<Color>(c);
      return;
    }
  }
}

void heat_bath_sweep(const LatticeGraph& g, ChainState& s, Rng& rng, bool random_scan) {
  if (random_scan) {
    for (std::size_t i = 0; i < s.sites.size(); ++i) heat_bath_update(g, s, s.sites[rng.below(s.sites.size())], rng);
  } else {
    for (VertexId v : s.sites) heat_bath_update(g, s, v, rng);
  }
}

int cluster_step(const LatticeGraph& g, ChainState& s, Rng& rng) {
  const int q = s.f.q;
  int a = 1 + static_cast<int>(rng.below(q));
  int b = 1 + static_cast<int>(rng.below(q - 1));
  if (b >= a) ++b;
  const auto& dom = s.constraint.domain;
  VertexSet ab(g.num_vertices());
  for (VertexId v : s.sites)
    if (s.f[v] == a || s.f[v] == b) ab.insert(v);
  int flipped = 0;
  for (const auto& comp : connected_components(g, ab)) {
    bool swappable = true;
    comp.for_each([&](VertexId v) {
      Color other = static_cast<Color>(s.f[v] == a ? b : a);
      if (!has_color(s.constraint.allowed[v], other)) swappable = false;
      for (VertexId w : g.slots(v))
        if (w != kNoVertex && !dom.contains(w) && (s.f[w] == a || s.f[w] == b)) swappable = false;
    });
    if (!swappable || !rng.coin()) continue;
    comp.for_each([&](VertexId v) { s.f[v] = static_cast<Color>(s.f[v] == a ? b : a); });
    ++flipped;
  }
  return flipped;
}

namespace {

struct Tally {
  long long samples = 0;
  long long first_half = 0;
  std::vector<long long> violations, violations_first;
  std::vector<std::vector<long long>> occupation;
  std::array<std::vector<long long>, 2> parity;
  std::array<long long, 2> parity_total{0, 0};
};

Tally run_chain(const ChainConfig& cfg, int chain) {
  const auto& g = cfg.graph;
  const int q = cfg.boundary.q;
  ChainState s = initial_state(cfg, chain);
  Rng rng(cfg.seed, static_cast<std::uint64_t>(chain));
  Tally t;
  t.violations.assign(s.sites.size(), 0);
  t.violations_first.assign(s.sites.size(), 0);
  t.occupation.assign(s.sites.size(), std::vector<long long>(q, 0));
  t.parity = {std::vector<long long>(q, 0), std::vector<long long>(q, 0)};
  const long long planned = std::max<long long>(1, (cfg.sweeps - cfg.burn_in) / cfg.thin);

  auto step = [&] {
    heat_bath_sweep(g, s, rng, cfg.random_scan);
    if (cfg.algorithm == Algorithm::HeatBathCluster) cluster_step(g, s, rng);
  };
  auto record = [&] {
    bool first = t.samples < planned / 2;
    for (std::size_t i = 0; i < s.sites.size(); ++i) {
      VertexId v = s.sites[i];
      Color c = s.f[v];
      if (!vertex_in_pattern(g, s.f, v, cfg.boundary)) {
        ++t.violations[i];
        if (first) ++t.violations_first[i];
      }
      ++t.occupation[i][c - 1];
      ++t.parity[g.parity(v)][c - 1];
      ++t.parity_total[g.parity(v)];
    }
    if (first) ++t.first_half;
    ++t.samples;
  };

  for (long long i = 0; i < cfg.burn_in; ++i) step();
  if (cfg.sweeps == cfg.burn_in) {
    record();
  } else {
    for (long long i = 1; i <= cfg.sweeps - cfg.burn_in; ++i) {
      step();
      if (i % cfg.thin == 0) record();
    }
  }
  if (!is_proper(g, s.f)) throw InvariantViolation("chain left the space of proper colourings");
  return t;
}

}  // namespace

OrderStats run_experiment(const ChainConfig& cfg) {
  validate_chain_config(cfg);
  std::vector<Tally> tallies(cfg.chains);
  parallel_for(static_cast<std::size_t>(cfg.chains), [&](std::size_t k) { tallies[k] = run_chain(cfg, static_cast<int>(k)); });

  Tally sum = tallies[0];
  for (std::size_t k = 1; k < tallies.size(); ++k) {
    const auto& t = tallies[k];
    sum.samples += t.samples;
    sum.first_half += t.first_half;
    for (std::size_t i = 0; i < sum.violations.size(); ++i) {
      sum.violations[i] += t.violations[i];
      sum.violations_first[i] += t.violations_first[i];
      for (std::size_t c = 0; c < sum.occupation[i].size(); ++c) sum.occupation[i][c] += t.occupation[i][c];
    }
    for (int p = 0; p < 2; ++p) {
      for (std::size_t c = 0; c < sum.parity[p].size(); ++c) sum.parity[p][c] += t.parity[p][c];
      sum.parity_total[p] += t.parity_total[p];
    }
  }

  OrderStats st;
  st.q = cfg.boundary.q;
  st.sites = cfg.domain.ids();
  st.samples = sum.samples;
  const double n = static_cast<double>(sum.samples);
  const double n1 = static_cast<double>(sum.first_half), n2 = n - n1;
  for (std::size_t i = 0; i < st.sites.size(); ++i) {
    st.violation_rate.push_back(static_cast<double>(sum.violations[i]) / n);
    std::vector<double> occ;
    for (long long k : sum.occupation[i]) occ.push_back(static_cast<double>(k) / n);
    st.occupation.push_back(std::move(occ));
    if (n1 > 0 && n2 > 0) {
      double r1 = static_cast<double>(sum.violations_first[i]) / n1;
      double r2 = static_cast<double>(sum.violations[i] - sum.violations_first[i]) / n2;
      st.split_half_gap = std::max(st.split_half_gap, std::abs(r1 - r2));
    }
  }
  for (int p = 0; p < 2; ++p) {
    for (long long k : sum.parity[p])
      st.parity_occupation[p].push_back(sum.parity_total[p] ? static_cast<double>(k) / static_cast<double>(sum.parity_total[p]) : 0.0);
  }
  return st;
}

std::string stats_csv(const OrderStats& stats) {
  std::string out = "vertex_id,violation_rate";
  for (int c = 1; c <= stats.q; ++c) out += ",c" + std::to_string(c);
  out += "\n";
  char buf[64];
  for (std::size_t i = 0; i < stats.sites.size(); ++i) {
    out += std::to_string(stats.sites[i]);
    std::snprintf(buf, sizeof buf, ",%.10g", stats.violation_rate[i]);
    out += buf;
    for (double x : stats.occupation[i]) {
      std::snprintf(buf, sizeof buf, ",%.10g", x);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::vector<std::vector<double>> heat_bath_transition_matrix(const LatticeGraph& g, const ColoringConstraint& c,
                                                             const std::vector<Coloring>& states) {
  std::map<std::vector<Color>, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i].values] = i;
  auto sites = c.domain.ids();
  if (sites.empty()) throw PreconditionError("transition matrix needs a non-empty domain");
  std::vector<std::vector<double>> k(states.size(), std::vector<double>(states.size(), 0.0));
  ChainState s{Coloring(), c, sites};
  for (std::size_t i = 0; i < states.size(); ++i) {
    s.f = states[i];
    for (VertexId v : sites) {
      ColorSet opts = heat_bath_options(g, s, v);
      double w = 1.0 / static_cast<double>(sites.size()) / color_count(opts);
      for (int col : colors_of(opts)) {
        Coloring y = states[i];
        y[v] = static_cast<Color>(col);
        auto it = index.find(y.values);
        if (it == index.end()) throw InvariantViolation("heat-bath move leaves the state space");
        k[i][it->second] += w;
      }
    }
  }
  return k;
}

}  // namespace chroma
