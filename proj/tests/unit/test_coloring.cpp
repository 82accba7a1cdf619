#include <gtest/gtest.h>

#include <set>

#include "chroma/coloring.hpp"
#include "chroma/errors.hpp"
#include "chroma/exact.hpp"
#include "chroma/lattice.hpp"
#include "chroma/rng.hpp"

using namespace chroma;

namespace {
LatticeGraph box(int a, int b) { return LatticeGraph({a, b}, {false, false}); }
}  // namespace

TEST(Coloring, PureSamplesAreProperAndInPattern) {
  LatticeGraph g = box(5, 5);
  Pattern p = Pattern::parse("A=1,2;B=3,4,5", 5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Coloring f = pure_pattern_sample(g, g.all(), p, seed);
    EXPECT_TRUE(is_total(f));
    EXPECT_TRUE(is_proper(g, f));
    EXPECT_TRUE(in_pattern(g, f, g.all(), p));
  }
}

TEST(Coloring, PureSampleOutcomeCount) {
  // 2x2 box, A={1}, B={2,3}: two odd cells with two choices each.
  LatticeGraph g = box(2, 2);
  Pattern p = Pattern::parse("A=1;B=2,3", 3);
  std::set<Coloring> seen;
  for (std::uint64_t seed = 0; seed < 400; ++seed) seen.insert(pure_pattern_sample(g, g.all(), p, seed));
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Coloring, ExtendOutsideKeepsInsideAndIsProper) {
  LatticeGraph g = box(6, 6);
  VertexSet domain = VertexSet::parse(g.num_vertices(), "14,15,20,21");
  BoundaryCondition bc{domain, Pattern::parse("A=1;B=2,3", 3)};
  Coloring inside(3, g.num_vertices());
  inside[14] = 1;
  inside[15] = 2;
  inside[20] = 3;
  inside[21] = 1;
  Coloring f = extend_outside(g, inside, bc, 9);
  EXPECT_TRUE(is_proper(g, f));
  for (VertexId v : domain.ids()) EXPECT_EQ(f[v], inside[v]);
  EXPECT_TRUE(in_pattern(g, f, domain.complement(), bc.pattern));
}

TEST(Coloring, FileRoundTrip) {
  LatticeGraph g({3, 4}, {false, true});
  Coloring f = pure_pattern_sample(g, g.all(), Pattern::parse("A=1,2;B=3,4", 4), 3);
  auto [g2, f2] = read_coloring(write_coloring(g, f));
  EXPECT_EQ(g2, g);
  EXPECT_EQ(f2, f);
  EXPECT_THROW(read_coloring("q=3;dims=2,2;periodic=0,0\n1 2 1\n"), PreconditionError);
}

class Repair : public ::testing::Test {
 protected:
  LatticeGraph g = box(4, 4);
  VertexSet cells(std::initializer_list<VertexId> ids) {
    VertexSet s(g.num_vertices());
    for (VertexId v : ids) s.insert(v);
    return s;
  }
  RepairInstance instance_q4() {
    RepairInstance inst;
    inst.s = cells({5, 6, 9, 10});
    inst.p0 = Pattern::parse("A=1,2;B=3,4", 4);
    inst.parts = {{inst.p0, cells({4, 0, 1, 2, 3, 7})},
                  {Pattern::parse("A=1,3;B=2,4", 4), cells({8, 12, 13, 14, 15, 11})}};
    return inst;
  }
};

TEST_F(Repair, LayoutAndFillingCount) {
  RepairInstance inst = instance_q4();
  RepairLayout L = repair_layout(g, inst);
  EXPECT_EQ(L.s_plus.size(), 12u);
  EXPECT_EQ(L.kept0, cells({0, 3, 12, 15}));
  EXPECT_TRUE(L.kept1.empty());
  EXPECT_EQ(L.filled.size(), 12u);
  EXPECT_EQ(filling_count(g, L, inst.p0), "4096");
}

TEST_F(Repair, RelabelMapsSidesInOrder) {
  Pattern p0 = Pattern::parse("A=1,2;B=3,4", 4);
  auto m = canonical_relabel(Pattern::parse("A=1,3;B=2,4", 4), p0);
  EXPECT_EQ(m[1], 1);
  EXPECT_EQ(m[3], 2);
  EXPECT_EQ(m[2], 3);
  EXPECT_EQ(m[4], 4);
}

TEST_F(Repair, TransformRoundTripsOnRandomInputs) {
  RepairInstance inst = instance_q4();
  RepairLayout L = repair_layout(g, inst);
  ColoringConstraint c = free_constraint(g, g.all(), 4);
  for (const auto& part : inst.parts) restrict_constraint(g, c, plus(g, internal_boundary(g, part.region)), part.pattern);
  std::vector<Coloring> omega;
  enumerate_colorings(g, c, [&](const Coloring& f) { omega.push_back(f); });
  ASSERT_FALSE(omega.empty());
  auto fillings = enumerate_fillings(g, L, inst.p0, 1u << 13);
  Rng rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const Coloring& f = omega[rng.below(omega.size())];
    const Coloring& h = fillings[rng.below(fillings.size())];
    Coloring out = repair_transform(g, inst, f, h);
    EXPECT_TRUE(is_proper(g, out));
    RepairPreimage pre = repair_inverse(g, inst, out);
    L.kept0.for_each([&](VertexId v) { EXPECT_EQ(pre.outside[v], f[v]); });
    L.filled.for_each([&](VertexId v) { EXPECT_EQ(pre.filling[v], h[v]); });
  }
}

TEST_F(Repair, RejectsBadInstances) {
  RepairInstance inst = instance_q4();
  inst.parts[0].region.erase(0);
  EXPECT_THROW(repair_layout(g, inst), PreconditionError);
  inst = instance_q4();
  inst.p0 = Pattern::parse("A=1,2,3;B=4", 4);
  EXPECT_THROW(repair_layout(g, inst), PreconditionError);
}
