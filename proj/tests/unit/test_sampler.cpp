#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "chroma/coloring.hpp"
#include "chroma/errors.hpp"
#include "chroma/exact.hpp"
#include "chroma/sampler.hpp"

using namespace chroma;

namespace {

ChainConfig config(int n, long long sweeps, std::uint64_t seed) {
  ChainConfig c;
  c.graph = LatticeGraph({n, n}, {false, false});
  c.domain = c.graph.all();
  c.boundary = Pattern::parse("A=1;B=2,3", 3);
  c.seed = seed;
  c.sweeps = sweeps;
  c.burn_in = sweeps / 10;
  return c;
}

}  // namespace

TEST(Sampler, StatesStayProperAndAllowed) {
  ChainConfig c = config(5, 0, 4);
  ChainState s = initial_state(c, 0);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    heat_bath_sweep(c.graph, s, rng, i % 2 == 1);
    if (i % 3 == 0) cluster_step(c.graph, s, rng);
    ASSERT_TRUE(is_proper(c.graph, s.f));
    for (VertexId v : s.sites) ASSERT_TRUE(has_color(s.constraint.allowed[v], s.f[v]));
  }
}

TEST(Sampler, DetailedBalanceOnTwoByTwo) {
  LatticeGraph g({2, 2}, {false, false});
  ColoringConstraint c = free_constraint(g, g.all(), 3);
  std::vector<Coloring> states;
  enumerate_colorings(g, c, [&](const Coloring& f) { states.push_back(f); });
  ASSERT_EQ(states.size(), 18u);
  auto p = heat_bath_transition_matrix(g, c, states);
  for (std::size_t i = 0; i < states.size(); ++i) {
    double row = 0;
    for (std::size_t j = 0; j < states.size(); ++j) {
      row += p[i][j];
      // Uniform target: detailed balance is symmetry of the kernel.
      EXPECT_NEAR(p[i][j], p[j][i], 1e-12);
    }
    EXPECT_NEAR(row, 1.0, 1e-12);
  }
}

TEST(Sampler, DeterministicForFixedSeed) {
  ChainConfig c = config(4, 300, 17);
  EXPECT_EQ(stats_csv(run_experiment(c)), stats_csv(run_experiment(c)));
  ChainConfig other = c;
  other.seed = 18;
  EXPECT_NE(stats_csv(run_experiment(c)), stats_csv(run_experiment(other)));
}

TEST(Sampler, CsvHeader) {
  OrderStats s = run_experiment(config(3, 20, 1));
  std::string csv = stats_csv(s);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "vertex_id,violation_rate,c1,c2,c3");
  EXPECT_EQ(s.sites.size(), 9u);
  EXPECT_EQ(s.samples, 18);
}

TEST(Sampler, CentreMarginalCloseToExact) {
  ChainConfig c = config(4, 40000, 5);
  OrderStats s = run_experiment(c);
  const VertexId centre = 10;
  auto it = std::find(s.sites.begin(), s.sites.end(), centre);
  ASSERT_NE(it, s.sites.end());
  const auto& occ = s.occupation[it - s.sites.begin()];
  // Exact centre marginal of this instance: (36/41, 5/82, 5/82).
  EXPECT_LT(tv_distance(occ, {36.0 / 41, 5.0 / 82, 5.0 / 82}), 0.03);
}

TEST(Sampler, ClusterStepsFlipSomething) {
  ChainConfig c = config(6, 0, 9);
  ChainState s = initial_state(c, 0);
  Rng rng(9);
  long long flipped = 0;
  for (int i = 0; i < 100; ++i) {
    heat_bath_sweep(c.graph, s, rng);
    flipped += cluster_step(c.graph, s, rng);
    ASSERT_TRUE(is_proper(c.graph, s.f));
  }
  EXPECT_GT(flipped, 0);
}

TEST(Sampler, RejectsBadConfigs) {
  ChainConfig c = config(3, 10, 0);
  c.burn_in = 11;
  EXPECT_THROW(run_experiment(c), PreconditionError);
  c = config(3, 10, 0);
  c.thin = 0;
  EXPECT_THROW(run_experiment(c), PreconditionError);
  EXPECT_THROW(parse_algorithm("metropolis"), PreconditionError);
}
