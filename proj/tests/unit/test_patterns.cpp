#include <gtest/gtest.h>

#include <set>

#include "chroma/errors.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"

using namespace chroma;

TEST(Patterns, DominantCounts) {
  const std::map<int, std::size_t> expected = {{3, 6}, {4, 6}, {5, 20}, {6, 20}, {7, 70}, {8, 70}};
  for (auto [q, n] : expected) EXPECT_EQ(enumerate_dominant(q).size(), n) << "q=" << q;
}

TEST(Patterns, EnumerationIsCanonicalAndDistinct) {
  auto all = enumerate_dominant(5);
  std::set<std::pair<ColorSet, ColorSet>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(all[i].dominant());
    EXPECT_EQ(all[i].a | all[i].b, all_colors(5));
    EXPECT_TRUE(seen.insert({all[i].a, all[i].b}).second);
    if (i > 0) EXPECT_TRUE(all[i - 1] < all[i]);
  }
  EXPECT_EQ(dominant_class(5, 0).size(), 10u);
  EXPECT_EQ(dominant_class(5, 1).size(), 10u);
  EXPECT_EQ(dominant_class(4, 1).size(), 0u);
}

TEST(Patterns, SidesByClass) {
  Pattern p = Pattern::parse("A=1,2,3;B=4,5", 5);
  EXPECT_EQ(p.pattern_class(), 1);
  EXPECT_EQ(p.boundary_side(), color_set({4, 5}, 5));
  EXPECT_EQ(p.interior_side(), color_set({1, 2, 3}, 5));
  Pattern p0 = Pattern::parse("A=1;B=2,3", 3);
  EXPECT_EQ(p0.pattern_class(), 0);
  EXPECT_EQ(p0.boundary_side(), color_bit(1));
}

TEST(Patterns, PParity) {
  LatticeGraph g({3, 3}, {false, false});
  const VertexId even = 4, odd = 1;
  Pattern small_a = Pattern::parse("A=1;B=2,3", 3);
  Pattern large_a = Pattern::parse("A=1,2,3;B=4,5", 5);
  EXPECT_TRUE(is_p_even(g, even, small_a));
  EXPECT_FALSE(is_p_even(g, odd, small_a));
  EXPECT_FALSE(is_p_even(g, even, large_a));
  EXPECT_TRUE(is_p_even(g, odd, large_a));
}

TEST(Patterns, ParseRoundTripAndErrors) {
  Pattern p = Pattern::parse("A=2,4;B=1,3", 4);
  EXPECT_EQ(p.to_string(), "A=2,4;B=1,3");
  EXPECT_EQ(Pattern::parse(p.to_string(), 4), p);
  EXPECT_THROW(Pattern::parse("A=1,2;B=2,3", 4), PreconditionError);
  EXPECT_THROW(Pattern::parse("A=1;B=9", 4), PreconditionError);
  EXPECT_THROW(Pattern::parse("nonsense", 4), PreconditionError);
  EXPECT_THROW(validate_q(1), PreconditionError);
}
