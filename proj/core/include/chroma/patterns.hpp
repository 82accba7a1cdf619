#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chroma/lattice.hpp"

namespace chroma {

using Color = std::uint8_t;
inline constexpr Color kHole = 0;
inline constexpr int kMaxColors = 62;

// Bit c-1 set means colour c is present.
using ColorSet = std::uint64_t;

inline ColorSet color_bit(int c) { return ColorSet{1} << (c - 1); }
inline ColorSet all_colors(int q) { return (ColorSet{1} << q) - 1; }
inline int color_count(ColorSet s) { return __builtin_popcountll(s); }
inline bool has_color(ColorSet s, int c) { return c >= 1 && ((s >> (c - 1)) & 1U); }
std::vector<int> colors_of(ColorSet s);
ColorSet color_set(const std::vector<int>& colors, int q);
// "1,2,4"
std::string color_list(ColorSet s);

// Ordered pair of disjoint colour sets.
struct Pattern {
  int q = 0;
  ColorSet a = 0;
  ColorSet b = 0;

  int size_a() const { return color_count(a); }
  int size_b() const { return color_count(b); }
  bool dominant() const;
  // Class 0 when |A| <= |B|, class 1 otherwise.
  int pattern_class() const { return size_a() <= size_b() ? 0 : 1; }
  // Parity (0 even, 1 odd) of the vertices called P-even.
  int even_parity() const { return pattern_class(); }
  // Boundary side is A for class 0 and B for class 1; the interior side is the other one.
  ColorSet boundary_side() const { return pattern_class() == 0 ? a : b; }
  ColorSet interior_side() const { return pattern_class() == 0 ? b : a; }
  // Side allowed at a vertex of the given lattice parity.
  ColorSet side_for_parity(int parity) const { return parity == even_parity() ? boundary_side() : interior_side(); }

  std::string to_string() const;  // "A=1,2;B=3,4"
  static Pattern parse(const std::string& text, int q);

  friend bool operator==(const Pattern& x, const Pattern& y) { return x.q == y.q && x.a == y.a && x.b == y.b; }
  friend bool operator<(const Pattern& x, const Pattern& y);
};

Pattern make_pattern(int q, const std::vector<int>& a, const std::vector<int>& b);
void validate_q(int q);

// All dominant patterns in canonical order (|A|, A mask, B mask).
std::vector<Pattern> enumerate_dominant(int q);
std::vector<Pattern> dominant_class(int q, int cls);

bool is_p_even(const LatticeGraph& g, VertexId v, const Pattern& p);

}  // namespace chroma
