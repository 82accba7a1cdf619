#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "chroma/coloring.hpp"
#include "chroma/errors.hpp"
#include "chroma/exact.hpp"
#include "chroma/generators.hpp"
#include "chroma/lattice.hpp"
#include "chroma/rng.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {
LatticeGraph box(std::vector<int> dims) { return LatticeGraph(dims, std::vector<bool>(dims.size(), false)); }
const Pattern kP3 = Pattern::parse("A=1;B=2,3", 3);
}  // namespace

TEST(Exact, FrozenFreeCounts) {
  EXPECT_EQ(count_colorings(box({2, 2}), free_constraint(box({2, 2}), box({2, 2}).all(), 3)).count, 18);
  EXPECT_EQ(count_colorings(box({3, 3}), free_constraint(box({3, 3}), box({3, 3}).all(), 3)).count, 246);
  EXPECT_EQ(count_colorings(box({4, 4}), free_constraint(box({4, 4}), box({4, 4}).all(), 3)).count, 7812);
  EXPECT_EQ(count_colorings(box({3, 4}), free_constraint(box({3, 4}), box({3, 4}).all(), 4)).count, 157140);
}

TEST(Exact, TorusTwoByTwoIsAFourCycle) {
  LatticeGraph g({2, 2}, {true, true});
  CountResult r = transfer_count(g, free_constraint(g, g.all(), 3));
  EXPECT_EQ(r.count, 18);
  EXPECT_NEAR(r.log_count_per_site, std::log(18.0) / 4, 1e-12);
  EXPECT_EQ(count_colorings(g, free_constraint(g, g.all(), 3)).count, 18);
}

TEST(Exact, BacktrackingMatchesBruteForce) {
  Rng rng(3);
  const std::vector<LatticeGraph> boxes = {box({3, 4}), box({2, 2, 3}), LatticeGraph({4, 3}, {true, false})};
  for (int trial = 0; trial < 40; ++trial) {
    const LatticeGraph& g = boxes[trial % boxes.size()];
    const int q = 3 + trial % 3;
    VertexSet domain = random_connected_set(g, 1 + rng.below(9), rng);
    ColoringConstraint c = free_constraint(g, domain, q);
    if (trial % 2) {
      // Pin a random vertex outside the domain next to it.
      Coloring pins(q, g.num_vertices());
      VertexSet ext = external_boundary(g, domain);
      if (!ext.empty()) {
        auto ids = ext.ids();
        pins[ids[rng.below(ids.size())]] = static_cast<Color>(1 + rng.below(q));
      }
      c = pinned_constraint(g, domain, pins);
    }
    EXPECT_EQ(count_colorings(g, c).count, oracle::brute_count(g, c)) << g.spec_string() << " U=" << domain.to_string();
  }
}

TEST(Exact, TransferMatchesBacktrackingOnSlabs) {
  for (auto dims : std::vector<std::vector<int>>{{2, 2, 3}, {3, 3, 4}, {2, 3, 5}}) {
    LatticeGraph g = box(dims);
    ColoringConstraint c = pattern_boundary_constraint(g, g.all(), kP3);
    EXPECT_EQ(transfer_count(g, c).count, count_colorings(g, c).count);
    ColoringConstraint f = free_constraint(g, g.all(), 3);
    EXPECT_EQ(transfer_count(g, f).count, count_colorings(g, f).count);
  }
}

TEST(Exact, MarginalsFrozen) {
  auto check = [](int n, std::vector<std::string> want) {
    LatticeGraph g = box({n, n});
    ColoringConstraint c = pattern_boundary_constraint(g, g.all(), kP3);
    std::vector<int> centre{n / 2, n / 2};
    ExactMarginal m = exact_marginal(g, c, g.id(centre));
    ASSERT_EQ(m.distribution.size(), 3u);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(to_string(m.distribution[i]), want[i]) << n;
  };
  check(3, {"8/9", "1/18", "1/18"});
  check(4, {"36/41", "5/82", "5/82"});
  check(5, {"3281/3906", "625/7812", "625/7812"});
}

TEST(Exact, MarginalMatchesBruteForce) {
  LatticeGraph g = box({3, 4});
  ColoringConstraint c = pattern_boundary_constraint(g, g.all(), kP3);
  for (VertexId v : {5u, 6u, 0u}) {
    auto counts = oracle::brute_marginal(g, c, v);
    unsigned long long total = 0;
    for (auto x : counts) total += x;
    ExactMarginal m = exact_marginal(g, c, v);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(m.distribution[i], Rational(BigInt(counts[i]), BigInt(total)));
  }
}

TEST(Exact, EnumerationVisitsEveryColouringOnce) {
  LatticeGraph g = box({2, 3});
  ColoringConstraint c = free_constraint(g, g.all(), 3);
  std::vector<Coloring> seen;
  enumerate_colorings(g, c, [&](const Coloring& f) { seen.push_back(f); });
  EXPECT_EQ(seen.size(), oracle::brute_count(g, c));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_THROW(enumerate_colorings(g, c, [](const Coloring&) {}, 5), ResourceError);
}

TEST(Exact, ToyRatiosFrozen) {
  LatticeGraph g = box({5, 5});
  VertexSet centre = VertexSet::parse(25, "12");
  Pattern p0 = Pattern::parse("A=1,2;B=3,4", 4);
  ToyRatio adjacent = toy_ratio(g, g.all(), centre, p0, Pattern::parse("A=1,3;B=2,4", 4));
  EXPECT_EQ(adjacent.n_u, BigInt(1048576));
  EXPECT_EQ(adjacent.n_empty, BigInt(33554432));
  EXPECT_EQ(adjacent.ratio, Rational(1, 32));
  EXPECT_TRUE(adjacent.equality);
  ToyRatio swapped = toy_ratio(g, g.all(), centre, p0, Pattern::parse("A=3,4;B=1,2", 4));
  EXPECT_EQ(swapped.n_u, 0);
  EXPECT_LT(swapped.ratio, Rational(1, 32));

  VertexSet plus_shape = VertexSet::parse(25, "7,11,12,13,17");
  ToyRatio odd = toy_ratio(g, g.all(), plus_shape, Pattern::parse("A=1,2;B=3,4,5", 5),
                           Pattern::parse("A=1,2,3;B=4,5", 5));
  EXPECT_EQ(odd.n_u, BigInt("1289945088"));
  EXPECT_EQ(odd.n_empty, BigInt("4353564672"));
  EXPECT_EQ(odd.ratio, Rational(8, 27));
  EXPECT_EQ(odd.exponent_numerator, 12);
  EXPECT_EQ(odd.exponent_denominator, 4);
}

TEST(Exact, ToyRatioPreconditions) {
  LatticeGraph g = box({5, 5});
  Pattern p0 = Pattern::parse("A=1,2;B=3,4", 4);
  EXPECT_THROW(toy_ratio(g, g.all(), VertexSet::parse(25, "12"), p0, Pattern::parse("A=1,3;B=2,4,5", 5)),
               PreconditionError);
  EXPECT_THROW(toy_ratio(g, g.all(), VertexSet::parse(25, "12"), p0, p0), PreconditionError);
}

TEST(Exact, RationalFormatting) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(parse_rational("3/9"), Rational(1, 3));
}

TEST(Exact, HtopEntriesAboveLowerBound) {
  HtopReport r = htop_estimate(4, {box({4, 4}), LatticeGraph({4, 4}, {true, true})});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_NEAR(r.lower_bound, 0.5 * std::log(4.0), 1e-12);
  for (const auto& e : r.entries) EXPECT_GT(e.log_count_per_site, r.lower_bound);
}
