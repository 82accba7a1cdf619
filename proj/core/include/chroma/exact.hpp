#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chroma/coloring.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"

namespace chroma {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);  // "num/den", or "num" when den = 1
Rational parse_rational(const std::string& text);

// Allowed colours per vertex of the domain Λ; vertices outside Λ are ignored.
struct ColoringConstraint {
  int q = 0;
  VertexSet domain;
  std::vector<ColorSet> allowed;
  std::string kind = "free";
};

ColoringConstraint free_constraint(const LatticeGraph& g, const VertexSet& domain, int q);
// Domain boundary (see domain_boundary) restricted to the pattern.
ColoringConstraint pattern_boundary_constraint(const LatticeGraph& g, const VertexSet& domain, const Pattern& p);
// Non-hole entries of `pins` inside Λ are fixed; those outside Λ remove their
// colour from adjacent domain vertices. Pins must be proper among themselves.
ColoringConstraint pinned_constraint(const LatticeGraph& g, const VertexSet& domain, const Coloring& pins);
void restrict_constraint(const LatticeGraph& g, ColoringConstraint& c, const VertexSet& where, const Pattern& p);

struct CountResult {
  BigInt count;
  double log_count_per_site = 0;
  std::string method;
};

struct CountOptions {
  std::size_t cache_limit = 1u << 21;
};

// Backtracking with forward checking, minimum-remaining-values order and
// caching of independent components.
CountResult count_colorings(const LatticeGraph& g, const ColoringConstraint& c, const CountOptions& opt = {});

struct TransferOptions {
  std::uint64_t max_states = 1u << 22;
};

// Layer dynamic program along the longest axis (trace over the first layer
// when that axis is periodic).
CountResult transfer_count(const LatticeGraph& g, const ColoringConstraint& c, const TransferOptions& opt = {});
int transfer_axis(const LatticeGraph& g);

// Calls visit for every proper colouring satisfying the constraint (holes
// outside Λ), in lexicographic order of ascending vertex ids. Stops with a
// resource error after `limit` colourings.
void enumerate_colorings(const LatticeGraph& g, const ColoringConstraint& c,
                         const std::function<void(const Coloring&)>& visit, std::size_t limit = 1u << 22);

struct ExactMarginal {
  VertexId vertex = 0;
  std::vector<Rational> distribution;  // index c-1
};
ExactMarginal exact_marginal(const LatticeGraph& g, const ColoringConstraint& c, VertexId v);

double tv_distance(const std::vector<double>& m1, const std::vector<double>& m2);
Rational tv_distance(const std::vector<Rational>& m1, const std::vector<Rational>& m2);
// Distributions over colourings of a common vertex list, keyed by colour tuple.
double tv_distance(const std::map<std::vector<Color>, double>& m1, const std::map<std::vector<Color>, double>& m2);

struct ToyRatio {
  BigInt n_u;
  BigInt n_empty;
  Rational ratio;
  std::optional<Rational> bound_exact;  // present when the exponent is an integer
  double bound = 0;
  long long exponent_numerator = 0;     // |∂••U| for even q, |∂U| for odd q
  long long exponent_denominator = 1;   // 1 for even q, 2d for odd q
  bool within_bound = false;
  bool equality = false;
  bool equality_predicted = false;
};
ToyRatio toy_ratio(const LatticeGraph& g, const VertexSet& domain, const VertexSet& u, const Pattern& p0,
                   const Pattern& p);

struct HtopEntry {
  std::string graph;
  BigInt count;
  double log_count_per_site = 0;
};
struct HtopReport {
  std::vector<HtopEntry> entries;
  double lower_bound = 0;  // ½ log(⌊q/2⌋⌈q/2⌉)
};
HtopReport htop_estimate(int q, const std::vector<LatticeGraph>& boxes);

}  // namespace chroma
