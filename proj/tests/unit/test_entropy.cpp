#include <gtest/gtest.h>

#include <cmath>

#include "chroma/entropy.hpp"
#include "chroma/errors.hpp"
#include "chroma/exact.hpp"
#include "chroma/rng.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {

FiniteDistribution random_law(Rng& rng, int n, int alphabet) {
  std::map<Outcome, double> p;
  double total = 0;
  for (int i = 0; i < 12; ++i) {
    Outcome o(n);
    for (int& x : o) x = static_cast<int>(rng.below(alphabet));
    const double w = rng.unit() + 0.01;
    p[o] += w;
    total += w;
  }
  for (auto& [o, w] : p) w /= total;
  return FiniteDistribution::from_probabilities(p);
}

}  // namespace

TEST(Entropy, ShearerOnThreeCopiesOfABit) {
  auto d = FiniteDistribution::from_probabilities({{{0, 0, 0}, 0.5}, {{1, 1, 1}, 0.5}});
  ShearerResult r = shearer_check(d, {{0, 1}, {1, 2}, {0, 2}}, 2);
  EXPECT_NEAR(r.lhs, std::log(2.0), 1e-12);
  EXPECT_NEAR(r.rhs, 1.5 * std::log(2.0), 1e-12);
  EXPECT_TRUE(r.holds);
}

TEST(Entropy, ShearerEqualityForProductLaws) {
  std::vector<Outcome> all;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) all.push_back({a, b, c});
  ShearerResult r = shearer_check(FiniteDistribution::uniform(all), {{0, 1}, {1, 2}, {0, 2}}, 2);
  EXPECT_NEAR(r.lhs, r.rhs, 1e-12);
  EXPECT_NEAR(r.lhs, 3 * std::log(3.0), 1e-12);
}

TEST(Entropy, ChainRule) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    FiniteDistribution d = random_law(rng, 3, 3);
    const double joint = shannon_entropy(d);
    EXPECT_NEAR(joint, shannon_entropy(d, {0}) + conditional_entropy(d, {1, 2}, {0}), 1e-12);
    EXPECT_NEAR(joint, shannon_entropy(d, {0, 1}) + conditional_entropy(d, {2}, {0, 1}), 1e-12);
    EXPECT_LE(conditional_entropy(d, {2}, {0, 1}), shannon_entropy(d, {2}) + 1e-12);
  }
}

TEST(Entropy, ExactRationalLaws) {
  auto d = FiniteDistribution::from_rationals({{{0}, Rational(1, 4)}, {{1}, Rational(3, 4)}});
  EXPECT_TRUE(d.exact);
  EXPECT_NEAR(shannon_entropy(d), -(0.25 * std::log(0.25) + 0.75 * std::log(0.75)), 1e-15);
  EXPECT_THROW(FiniteDistribution::from_rationals({{{0}, Rational(1, 4)}}), PreconditionError);
}

TEST(Entropy, TypeOfNeighbourhood) {
  // d = 2, q = 3: a colour seen once has 1*3 > 2, so no imbalance.
  EXPECT_EQ(type_of({1, 2, 1, 2}, 2, 3), (NeighborhoodType{color_set({1, 2}, 3), false}));
  // d = 3, q = 3: a colour seen once is unbalanced.
  EXPECT_TRUE(type_of({1, 1, 1, 1, 1, 2}, 3, 3).unbalanced);
  EXPECT_FALSE(type_of({1, 1, 1, 2, 2, 2}, 3, 3).unbalanced);
}

TEST(Entropy, ClassifyMatchesDefinition) {
  for (int q : {3, 4}) {
    LatticeGraph g({3, 3}, {false, false});
    ColoringConstraint c = free_constraint(g, g.all(), q);
    if (q == 4) c = pattern_boundary_constraint(g, g.all(), Pattern::parse("A=1,2;B=3,4", 4));
    // A three-colour boundary pattern leaves a small interesting family.
    if (q == 4) c.allowed[4] = all_colors(4);
    const std::vector<Coloring> omega = oracle::brute_colorings(g, c);
    ASSERT_FALSE(omega.empty());
    const VertexSet s = VertexSet::parse(9, "4");
    for (std::size_t i = 0; i < omega.size(); i += 1 + omega.size() / 40) {
      const ClassificationReport mine = classify(g, omega[i], omega, s);
      const oracle::Classification ref = oracle::classify_by_definition(g, omega[i], omega, s);
      EXPECT_EQ(mine.unbal, ref.unbal);
      EXPECT_EQ(mine.nondom, ref.nondom);
      EXPECT_EQ(mine.uniq, ref.uniq);
      ASSERT_EQ(mine.restricted.size(), ref.restricted.size());
      for (std::size_t k = 0; k < ref.restricted.size(); ++k) {
        EXPECT_EQ(mine.restricted[k].from, ref.restricted[k].first);
        EXPECT_EQ(mine.restricted[k].to, ref.restricted[k].second);
      }
      const Rational k_value = Rational(static_cast<long long>(ref.unbal.size())) +
                               Rational(static_cast<long long>(ref.nondom.size()), q) +
                               Rational(static_cast<long long>(ref.restricted.size()), 2);
      EXPECT_EQ(mine.k_value, k_value);
    }
  }
}

TEST(Entropy, ClassifyRequiresMembership) {
  LatticeGraph g({3, 3}, {false, false});
  const auto omega = oracle::brute_colorings(g, free_constraint(g, g.all(), 3));
  Coloring outsider(3, 9);
  for (VertexId v = 0; v < 9; ++v) outsider[v] = 1;
  EXPECT_THROW(classify(g, outsider, omega, VertexSet::parse(9, "4")), PreconditionError);
  EXPECT_THROW(classify(g, omega.front(), omega, VertexSet::parse(9, "0")), PreconditionError);
}

TEST(Entropy, ZBoundSingleFunction) {
  ZBoundResult r = z_bound_check({{1, 2, 1, 2}}, color_set({3}, 3), 2, 3);
  EXPECT_EQ(r.semi_restricted, 4);
  EXPECT_EQ(r.lhs, 1);
  EXPECT_EQ(r.base, 16);
  EXPECT_TRUE(r.holds);
  ASSERT_EQ(r.cases.size(), 3u);
  EXPECT_TRUE(r.cases[0].applicable);
  EXPECT_NEAR(r.cases[0].rhs, 16 * std::exp(-4.0 / 3), 1e-9);
  EXPECT_THROW(z_bound_check({{1, 2, 1, 2}}, color_set({1}, 3), 2, 3), PreconditionError);
  EXPECT_THROW(z_bound_check({{1, 2, 1, 2}, {1, 2, 3, 3}}, 0, 2, 3), PreconditionError);
}

TEST(Entropy, ZBoundExhaustiveSmall) {
  for (auto [d, q] : {std::pair{2, 3}, std::pair{2, 4}}) {
    ZBoundSweep s = z_bound_exhaustive(d, q);
    EXPECT_GT(s.checks, 0);
    EXPECT_EQ(s.failures, 0) << s.first_failure;
  }
}

TEST(Entropy, LocalBoundOnExactLaw) {
  LatticeGraph g({4, 4}, {false, false});
  ColoringConstraint c = pattern_boundary_constraint(g, g.all(), Pattern::parse("A=1;B=2,3", 3));
  std::vector<Coloring> omega;
  enumerate_colorings(g, c, [&](const Coloring& f) { omega.push_back(f); });
  const VertexSet s = VertexSet::parse(16, "5,6,9,10");
  EntropyLossReport r = entropy_loss_eval(g, s, omega);
  EXPECT_TRUE(r.bound_applicable);
  EXPECT_TRUE(r.holds);
  EXPECT_GE(r.gap, -1e-12);
  EXPECT_EQ(r.terms.size(), plus(g, s).size());
  for (const auto& t : r.terms)
    if (t.in_s) EXPECT_TRUE(t.caps_hold);
}
