#pragma once

#include <map>
#include <vector>

#include "chroma/approx.hpp"
#include "chroma/coloring.hpp"
#include "chroma/exact.hpp"
#include "chroma/lattice.hpp"

// Deliberately naive reference implementations used to cross-check the library.
namespace oracle {

using namespace chroma;

// Every assignment of allowed colours to the domain, in mixed-radix order;
// counts those with no monochromatic edge inside the domain.
unsigned long long brute_count(const LatticeGraph& g, const ColoringConstraint& c);
// Colour counts at v over the same enumeration (index c-1).
std::vector<unsigned long long> brute_marginal(const LatticeGraph& g, const ColoringConstraint& c, VertexId v);
std::vector<Coloring> brute_colorings(const LatticeGraph& g, const ColoringConstraint& c);

// Regular odd: internal boundary odd, external boundary even, and neither U
// nor its complement has a vertex without a neighbour on its own side.
bool regular_by_definition(const LatticeGraph& g, const VertexSet& u, SetParity parity);

// Components by repeated flood fill from the smallest unvisited vertex.
std::vector<VertexSet> flood_components(const LatticeGraph& g, const VertexSet& u);

struct Classification {
  VertexSet unbal, nondom, uniq;
  std::vector<std::pair<VertexId, VertexId>> restricted;  // (v, u), slot order
};
Classification classify_by_definition(const LatticeGraph& g, const Coloring& f, const std::vector<Coloring>& omega,
                                      const VertexSet& s);

}  // namespace oracle
