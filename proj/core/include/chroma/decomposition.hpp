#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"

namespace chroma {

// Pattern-indexed family of vertex sets with its derived sets:
// overlap = union of pairwise intersections, bad = vertices in no region,
// star = ∪ ∂••(region) ∪ bad ∪ overlap.
struct Atlas {
  std::vector<Pattern> patterns;
  std::vector<VertexSet> regions;
  VertexSet overlap;
  VertexSet bad;
  VertexSet star;

  int index_of(const Pattern& p) const;
  const VertexSet& region(const Pattern& p) const;
};

void derive_sets(const LatticeGraph& g, Atlas& atlas);

// Z_P = ({P-odd v : N(v) in the P pattern})^+ for every dominant P (or the
// given whitelist), with derived sets.
Atlas decompose(const LatticeGraph& g, const Coloring& f, const std::vector<Pattern>& whitelist = {});
VertexSet ordered_core(const LatticeGraph& g, const Coloring& f, const Pattern& p);

// Union of the components of star^{+radius} that touch the ambient face layer
// or separate some v ∈ V from it.
VertexSet seen_from(const LatticeGraph& g, const Atlas& atlas, const VertexSet& v, int radius = 5);

// Breakup of f seen from V built from the region decomposition. Requires the
// complement of the interior of Λ to be in the P0 pattern and a non-periodic
// axis (the face layer stands in for infinity).
Atlas construct_breakup(const LatticeGraph& g, const Coloring& f, const VertexSet& v, const VertexSet& domain,
                        const Pattern& p0, int radius = 5);

struct BreakupViolation {
  std::string clause;
  VertexId vertex = kNoVertex;
  VertexId other = kNoVertex;
  std::string pattern;
};

struct BreakupReport {
  bool ok = true;
  std::size_t violation_count = 0;
  std::vector<BreakupViolation> violations;  // first few, with witnesses
};

// Checks regularity of each region, Λ^c ⊆ X_{P0}, the defining equivalence on
// star^{+radius}, and the derived colour facts. When V is non-empty also
// checks that X is seen from V.
BreakupReport verify_breakup(const LatticeGraph& g, const Atlas& x, const Coloring& f, const VertexSet& domain,
                             const Pattern& p0, int radius = 5, const VertexSet* v = nullptr);

struct AtlasClass {
  long long l = 0;  // |∪ ∂X_P|, edges counted once
  long long m = 0;  // |overlap|
  long long n = 0;  // |bad|
  bool nontrivial = false;
  bool l_lower_bound = false;  // L >= d^2
};
AtlasClass classify_atlas(const LatticeGraph& g, const Atlas& x);

struct BpComponents {
  VertexSet z_bar;  // vertices of Z_P in the P pattern
  VertexSet b;      // ⊗2-components of the complement of z_bar that meet V
  long long diam_star = 0;
};
BpComponents bp_components(const LatticeGraph& g, const Coloring& f, const VertexSet& v, const Pattern& p);

// Regular P-even: region = (P-odd part)^+ and complement = (P-even part of complement)^+.
bool regular_p_even(const LatticeGraph& g, const VertexSet& region, const Pattern& p, VertexId* witness = nullptr);

}  // namespace chroma
