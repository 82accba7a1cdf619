#pragma once

#include <string>
#include <vector>

#include "chroma/decomposition.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"

namespace chroma {

// Odd sets have their internal boundary on odd vertices; the mirrored mode
// swaps the roles of the two parities.
enum class SetParity { Odd, Even };
int boundary_parity(SetParity p);  // 1 for Odd, 0 for Even

struct RegularityResult {
  bool regular = false;
  VertexId witness = kNoVertex;  // a vertex where the characterization fails
};
// U = (Even ∩ U)^+ and U^c = (Odd ∩ U^c)^+ (parities swapped for Even).
RegularityResult regularity_check(const LatticeGraph& g, const VertexSet& u, SetParity parity = SetParity::Odd);
bool is_parity_set(const LatticeGraph& g, const VertexSet& u, SetParity parity);

// Indexed family of regular odd (or mirrored even) sets of one ambient.
class OddSetCollection {
 public:
  OddSetCollection(const LatticeGraph& g, std::vector<VertexSet> sets, SetParity parity = SetParity::Odd);
  const std::vector<VertexSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  const VertexSet& operator[](std::size_t i) const { return sets_[i]; }
  SetParity parity() const { return parity_; }

 private:
  std::vector<VertexSet> sets_;
  SetParity parity_;
};

// Number of edges at v lying in the union of the edge boundaries.
int boundary_degree(const LatticeGraph& g, const std::vector<VertexSet>& sets, VertexId v);
// Every edge of ∪ ∂S_i has an endpoint in W. On failure `witness` gets the edge.
bool separates(const LatticeGraph& g, const VertexSet& w, const std::vector<VertexSet>& sets,
               DirectedEdge* witness = nullptr);

// {v : |∂v ∩ ∂S| >= d}. Separation of S is asserted whenever every boundary
// edge has both endpoints at full degree.
struct RevealedResult {
  VertexSet revealed;
  bool separation_applicable = false;
  bool separates = false;
};
RevealedResult revealed_vertices(const LatticeGraph& g, const VertexSet& s, SetParity parity = SetParity::Odd);

struct FourCycleResult {
  bool holds = true;
  long long edges_checked = 0;
  long long directions_checked = 0;
  long long directions_skipped = 0;  // u+e or v+e outside the ambient
  bool degree_sum_holds = true;      // |∂u ∩ ∂S| + |∂v ∩ ∂S| >= 2d at full-degree edges
  DirectedEdge witness{kNoVertex, kNoVertex, -1};
};
// Proven property; a failure raises InvariantViolation.
FourCycleResult four_cycle_check(const LatticeGraph& g, const VertexSet& s, SetParity parity = SetParity::Odd);

struct SeparatingParams {
  double s = -1;        // default √d
  double t = -1;        // default d/6
  double constant = 1;  // C in |∂S| C d^{-3/2} log d
};
struct SeparatingResult {
  VertexSet u;
  VertexSet separator;  // N(U)
  double s = 0;
  double t = 0;
  bool clamped = false;
  std::vector<std::string> warnings;
  long long boundary_edges = 0;  // |∂S|
  double size_bound = 0;
  bool within_size_bound = false;
  long long fallback_additions = 0;  // vertices added so that N(U) separates
  std::size_t b_size = 0, b1_size = 0, b2_size = 0;
};
// Covering construction run for the collection and for the complements with
// parities swapped; N(U) always separates, U ⊆ (∂••S)^+.
SeparatingResult separating_set(const LatticeGraph& g, const OddSetCollection& s, const SeparatingParams& params = {});

// Greedy T ⊆ candidates with N_t(candidates) ⊆ N(T).
VertexSet greedy_cover(const LatticeGraph& g, const VertexSet& candidates, int t);

struct WeakApproximation {
  std::vector<VertexSet> parts;  // A_i
  VertexSet star;                // A_*
  bool size_bound = false;       // |A_*| <= 3|W|
  bool location_bound = false;   // A_* ⊆ W^+
};
// Components of W^c of size > d contained in S_i make up A_i; W and the small
// components make up A_*. A_i ⊆ S_i ⊆ A_i ∪ A_* is asserted.
WeakApproximation weak_approximation(const LatticeGraph& g, const VertexSet& w, const OddSetCollection& s);

struct Approximation {
  std::vector<Pattern> patterns;
  std::vector<VertexSet> a_p;
  VertexSet a_star;
  VertexSet a_2star;
};
// Class-1 regions as odd sets, class-0 regions as even sets, each weakly
// approximated from W, then merged: A* = (Odd ∩ A⁰_*) ∪ (Even ∩ A¹_*), A** = A⁰_* ∪ A¹_*.
Approximation approximate_atlas(const LatticeGraph& g, const Atlas& x, const VertexSet& w);
// Checks the structural invariants (A* ⊆ A**, each A_P is P-even).
void validate_approximation(const LatticeGraph& g, const Approximation& a);

struct ClauseResult {
  std::string clause;
  bool holds = true;
  VertexId witness = kNoVertex;
  std::string detail;
};
struct ApproximationReport {
  bool ok = true;
  std::vector<ClauseResult> clauses;  // A1..A4
  long long l = 0;
};
ApproximationReport verify_approximation(const LatticeGraph& g, const Approximation& a, const Atlas& x,
                                         double size_constant = 1);

struct IsoperimetryReport {
  bool odd = false;
  bool padded = false;  // U^+ avoids the face layer of a box
  bool contains_even = false;
  bool boundary_applicable = false;
  long long boundary = 0;  // |∂U|
  long long boundary_rhs = 0;  // 2d(2d-1)
  bool boundary_holds = true;
  bool diameter_applicable = false;
  long long diameter_lhs = 0;  // |∂U| + |∂(U_iso^+)|
  double diameter_rhs = 0;     // ½(d-1)²(2 + diam U)
  bool diameter_holds = true;
};
IsoperimetryReport isoperimetry_checks(const LatticeGraph& g, const VertexSet& u);

// All regular sets of the given parity; ambient of at most 16 vertices.
std::vector<VertexSet> enumerate_regular_sets(const LatticeGraph& g, SetParity parity);

struct WeakFamilyReport {
  std::size_t sets_separated = 0;
  std::size_t distinct_approximations = 0;
  double family_bound = 0;  // 4^{|W|/d} for a single-set rule
};
// Distinct weak approximations produced from W over every regular odd set it separates.
WeakFamilyReport weak_approximation_family(const LatticeGraph& g, const VertexSet& w);

}  // namespace chroma
