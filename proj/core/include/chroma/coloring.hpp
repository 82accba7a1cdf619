#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"

namespace chroma {

// Per-vertex colours in 1..q; kHole (0) marks an uncoloured vertex.
struct Coloring {
  int q = 0;
  std::vector<Color> values;

  Coloring() = default;
  Coloring(int q_, std::size_t n) : q(q_), values(n, kHole) {}

  Color operator[](VertexId v) const { return values[v]; }
  Color& operator[](VertexId v) { return values[v]; }
  std::size_t size() const { return values.size(); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend bool operator<(const Coloring& a, const Coloring& b) { return a.values < b.values; }
};

bool is_total(const Coloring& f);
bool is_total_on(const Coloring& f, const VertexSet& u);
// No edge with two equal non-hole colours.
bool is_proper(const LatticeGraph& g, const Coloring& f);

// Vertices v of U with f(v) on the side of P matching v's P-parity.
bool in_pattern(const LatticeGraph& g, const Coloring& f, const VertexSet& u, const Pattern& p);
bool vertex_in_pattern(const LatticeGraph& g, const Coloring& f, VertexId v, const Pattern& p);
VertexSet pattern_vertices(const LatticeGraph& g, const Coloring& f, const Pattern& p);
// Colour set f(N(v)).
ColorSet neighbor_colors(const LatticeGraph& g, const Coloring& f, VertexId v);

struct BoundaryCondition {
  VertexSet domain;
  Pattern pattern;
};

// Λ's internal boundary with respect to the exterior of the ambient box:
// vertices of Λ adjacent to Λ^c or lying on a non-periodic face.
VertexSet domain_boundary(const LatticeGraph& g, const VertexSet& domain);
// Λ minus its domain boundary.
VertexSet domain_interior(const LatticeGraph& g, const VertexSet& domain);
void validate_boundary_condition(const LatticeGraph& g, const BoundaryCondition& bc);

Coloring pure_pattern_sample(const LatticeGraph& g, const VertexSet& u, const Pattern& p, std::uint64_t seed);
bool check_boundary(const LatticeGraph& g, const Coloring& f, const BoundaryCondition& bc);
Coloring extend_outside(const LatticeGraph& g, const Coloring& f, const BoundaryCondition& bc, std::uint64_t seed);

// Coloring file: "q=<q>;dims=<a,b>;periodic=<0,1>" then one line of colours.
std::string write_coloring(const LatticeGraph& g, const Coloring& f);
std::pair<LatticeGraph, Coloring> read_coloring(const std::string& text);
std::pair<LatticeGraph, Coloring> load_coloring_file(const std::string& path);
void save_coloring_file(const std::string& path, const LatticeGraph& g, const Coloring& f);

// Repair transform. S plus parts S_P partitioning S^c. Regions of class-0
// patterns are relabelled in place; class-1 regions are relabelled and
// translated by shift_direction along shift_axis; the rest (S_*) takes h.
struct RepairPart {
  Pattern pattern;
  VertexSet region;
};

struct RepairInstance {
  VertexSet s;
  std::vector<RepairPart> parts;
  Pattern p0;
  int shift_axis = 0;
  int shift_direction = +1;
};

struct RepairLayout {
  VertexSet s_plus;
  VertexSet kept0;          // class-0 regions minus S^+
  VertexSet kept1;          // class-1 regions minus S^+, before the shift
  VertexSet kept1_shifted;  // after the shift
  VertexSet filled;         // S_*: complement of kept0 and kept1_shifted
  std::vector<int> part_of;  // index into parts for every vertex of S^c, -1 on S
};

// Order-preserving relabelling taking P's boundary side to A0 and its
// interior side to B0.
std::vector<Color> canonical_relabel(const Pattern& p, const Pattern& p0);

RepairLayout repair_layout(const LatticeGraph& g, const RepairInstance& inst);
// Checks the structural preconditions and that f satisfies the pattern
// hypothesis on (∂•S_P)^+ for every part.
void validate_repair(const LatticeGraph& g, const RepairInstance& inst, const Coloring& f);
Coloring repair_transform(const LatticeGraph& g, const RepairInstance& inst, const Coloring& f, const Coloring& h);

struct RepairPreimage {
  Coloring outside;  // f on (S^+)^c, holes elsewhere
  Coloring filling;  // h on S_*, holes elsewhere
};
RepairPreimage repair_inverse(const LatticeGraph& g, const RepairInstance& inst, const Coloring& image);

// floor(q/2)^{|S_* even|} * ceil(q/2)^{|S_* odd|} as a decimal string.
std::string filling_count(const LatticeGraph& g, const RepairLayout& layout, const Pattern& p0);
// All P0-pattern fillings of S_*, in lexicographic order over ascending ids.
std::vector<Coloring> enumerate_fillings(const LatticeGraph& g, const RepairLayout& layout, const Pattern& p0,
                                         std::size_t limit);

}  // namespace chroma
