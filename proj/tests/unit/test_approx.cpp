#include <gtest/gtest.h>

#include "chroma/approx.hpp"
#include "chroma/errors.hpp"
#include "chroma/generators.hpp"
#include "chroma/rng.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {

LatticeGraph cube(int d, int side) {
  return LatticeGraph(std::vector<int>(d, side), std::vector<bool>(d, false));
}

// Even vertex nearest the middle of the box.
VertexId centre(const LatticeGraph& g) {
  std::vector<int> c;
  for (int n : g.dims()) c.push_back(n / 2);
  if (!g.is_even(g.id(c))) --c.back();
  return g.id(c);
}

VertexSet single(const LatticeGraph& g, VertexId v) {
  VertexSet s(g.num_vertices());
  s.insert(v);
  return s;
}

}  // namespace

TEST(Approx, RegularityMatchesDefinition) {
  Rng rng(12);
  const std::vector<LatticeGraph> graphs = {cube(2, 8), cube(3, 5), LatticeGraph({6, 6}, {true, true})};
  int regular = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const LatticeGraph& g = graphs[trial % graphs.size()];
    const SetParity parity = trial % 2 ? SetParity::Odd : SetParity::Even;
    VertexSet u = random_regular_set(g, rng, parity, 0.3, 1);
    if (trial % 4 >= 2 && !u.empty()) {
      auto ids = u.ids();
      u.erase(ids[rng.below(ids.size())]);
    }
    const bool want = oracle::regular_by_definition(g, u, parity);
    EXPECT_EQ(regularity_check(g, u, parity).regular, want) << g.spec_string() << " " << u.to_string();
    regular += want;
  }
  EXPECT_GT(regular, 30);
}

TEST(Approx, PlusOfEvenVertexIsRegularOdd) {
  LatticeGraph g = cube(2, 9);
  const VertexId v = centre(g);
  ASSERT_TRUE(g.is_even(v));
  EXPECT_TRUE(regularity_check(g, plus(g, single(g, v))).regular);
  EXPECT_FALSE(regularity_check(g, single(g, v)).regular);
  EXPECT_TRUE(regularity_check(g, plus(g, single(g, v + 1)), SetParity::Even).regular);
}

TEST(Approx, RevealedVerticesOfAPlusShape) {
  LatticeGraph g = cube(3, 9);
  const VertexId v = centre(g);
  const VertexSet s = plus(g, single(g, v));
  RevealedResult r = revealed_vertices(g, s);
  EXPECT_EQ(r.revealed, s - single(g, v));
  EXPECT_TRUE(r.separation_applicable);
  EXPECT_TRUE(r.separates);
  FourCycleResult fc = four_cycle_check(g, s);
  EXPECT_TRUE(fc.holds);
  EXPECT_GT(fc.edges_checked, 0);
}

TEST(Approx, IsoperimetryOfPlusShapeIsTight) {
  LatticeGraph g = cube(3, 9);
  IsoperimetryReport r = isoperimetry_checks(g, plus(g, single(g, centre(g))));
  EXPECT_TRUE(r.boundary_applicable);
  EXPECT_EQ(r.boundary, 30);
  EXPECT_EQ(r.boundary_rhs, 30);
  EXPECT_TRUE(r.boundary_holds);
}

TEST(Approx, SeparatingSetForPlusShapes) {
  LatticeGraph g = cube(2, 13);
  const VertexId v = centre(g);
  const VertexSet one = plus(g, single(g, v));
  const VertexSet two = plus(g, single(g, v + 4));
  for (const auto& family : std::vector<std::vector<VertexSet>>{{one}, {one, two}}) {
    OddSetCollection coll(g, family);
    SeparatingResult r = separating_set(g, coll);
    EXPECT_TRUE(separates(g, r.separator, family));
    VertexSet near(g.num_vertices());
    for (const auto& s : family) near |= vertex_boundaries(g, s).both;
    EXPECT_TRUE(r.u.is_subset_of(plus(g, near)));
    EXPECT_EQ(r.boundary_edges, 12 * static_cast<long long>(family.size()));
  }
}

TEST(Approx, WeakApproximationFromBoundary) {
  LatticeGraph g = cube(2, 11);
  const VertexSet s = plus(g, single(g, centre(g)));
  OddSetCollection coll(g, {s});
  const VertexSet w = vertex_boundaries(g, s).both;
  WeakApproximation a = weak_approximation(g, w, coll);
  ASSERT_EQ(a.parts.size(), 1u);
  EXPECT_TRUE(a.parts[0].is_subset_of(s));
  EXPECT_TRUE(s.is_subset_of(a.parts[0] | a.star));
  EXPECT_TRUE(a.location_bound);
}

TEST(Approx, NonRegularSetsAreRejected) {
  LatticeGraph g = cube(2, 6);
  EXPECT_THROW(OddSetCollection(g, {VertexSet::parse(36, "14")}), PreconditionError);
}

TEST(Approx, VerifyApproximationClauses) {
  LatticeGraph g = cube(2, 6);
  Atlas x;
  x.patterns = {Pattern::parse("A=1;B=2,3", 3)};
  x.regions = {g.all()};
  derive_sets(g, x);
  Approximation a;
  a.patterns = x.patterns;
  a.a_p = {g.all()};
  a.a_star = g.empty_set();
  a.a_2star = g.empty_set();
  EXPECT_TRUE(verify_approximation(g, a, x).ok);

  Approximation moved = a;
  moved.a_2star = VertexSet::parse(36, "14");
  ApproximationReport r = verify_approximation(g, moved, x);
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.clauses.size(), 4u);
  EXPECT_FALSE(r.clauses[3].holds);
  EXPECT_EQ(r.clauses[3].witness, 14u);

  x.regions = {g.all() - VertexSet::parse(36, "0")};
  derive_sets(g, x);
  EXPECT_FALSE(verify_approximation(g, a, x).clauses[0].holds);
}

TEST(Approx, ExhaustiveRegularSetsOnSmallTorus) {
  LatticeGraph g({4, 4}, {true, true});
  auto sets = enumerate_regular_sets(g, SetParity::Odd);
  for (const auto& s : sets) EXPECT_TRUE(oracle::regular_by_definition(g, s, SetParity::Odd));
  std::size_t by_definition = 0;
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    VertexSet s(16);
    for (VertexId v = 0; v < 16; ++v)
      if ((mask >> v) & 1u) s.insert(v);
    by_definition += oracle::regular_by_definition(g, s, SetParity::Odd);
  }
  EXPECT_EQ(sets.size(), by_definition);
}
