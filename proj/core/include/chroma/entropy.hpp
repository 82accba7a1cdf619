#pragma once

#include <map>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/decomposition.hpp"
#include "chroma/exact.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"

namespace chroma {

using Outcome = std::vector<int>;

// Joint law of n discrete coordinates. Entropies use natural logarithms.
struct FiniteDistribution {
  std::map<Outcome, double> prob;
  bool exact = false;  // built from rationals whose sum was exactly 1

  static FiniteDistribution from_probabilities(std::map<Outcome, double> p);
  static FiniteDistribution from_rationals(const std::map<Outcome, Rational>& p);
  // Empirical law of the given counts.
  static FiniteDistribution from_counts(const std::map<Outcome, long long>& counts);
  static FiniteDistribution uniform(const std::vector<Outcome>& outcomes);

  std::size_t arity() const;
  // Non-negative probabilities, common arity, total 1 within 1e-12.
  void validate() const;
};

// Law of the selected coordinates, in the given order.
FiniteDistribution marginal(const FiniteDistribution& d, const std::vector<int>& coords);

double shannon_entropy(const FiniteDistribution& d);
double shannon_entropy(const FiniteDistribution& d, const std::vector<int>& coords);
// Σ_y P(Y=y) Ent(Z | Y=y), summed directly over the conditional laws.
double conditional_entropy(const FiniteDistribution& d, const std::vector<int>& target,
                           const std::vector<int>& given);

struct ShearerResult {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};
// Ent(Z_1..Z_n) <= (1/k) Σ_I Ent(Z_I) for a cover hitting every index k times.
ShearerResult shearer_check(const FiniteDistribution& d, const std::vector<std::vector<int>>& cover, int k);

struct NeighborhoodType {
  ColorSet colors = 0;
  bool unbalanced = false;
  friend bool operator==(const NeighborhoodType&, const NeighborhoodType&) = default;
  friend auto operator<=>(const NeighborhoodType&, const NeighborhoodType&) = default;
};
// Type of a function [2d] -> [q]: its image and whether some colour of the
// image has multiplicity m with m*q <= d.
NeighborhoodType type_of(const std::vector<Color>& psi, int d, int q);
NeighborhoodType neighborhood_type(const LatticeGraph& g, const Coloring& f, VertexId v, int q);

struct ClassificationReport {
  VertexSet unbal;
  VertexSet nondom;
  std::vector<DirectedEdge> restricted;
  VertexSet uniq;
  Rational k_value;  // |unbal| + |nondom|/q + |restricted|/d
};
// Exact evaluation over an explicit finite Ω; f must belong to Ω and every
// vertex of S must have full degree.
ClassificationReport classify(const LatticeGraph& g, const Coloring& f, const std::vector<Coloring>& omega,
                              const VertexSet& s);
// Minimum of k_value over f ∈ Ω.
Rational k_min(const LatticeGraph& g, const std::vector<Coloring>& omega, const VertexSet& s);

struct ZBoundCase {
  std::string name;
  bool applicable = false;
  double rhs = 0;
  bool holds = true;
};
struct ZBoundResult {
  BigInt lhs;                // |Ψ| * |I|^{2d}
  BigInt base;               // (⌊q/2⌋⌈q/2⌉)^{2d}
  NeighborhoodType type;
  int semi_restricted = 0;   // indices j with {ψ(j)} != J
  std::vector<ZBoundCase> cases;  // "semi-restricted", "non-dominant", "unbalanced-or-uncovered"
  bool holds = true;
};
ZBoundResult z_bound_check(const std::vector<std::vector<Color>>& psi_set, ColorSet i_set, int d, int q);

struct ZBoundSweep {
  long long families = 0;
  long long checks = 0;
  long long failures = 0;
  std::string first_failure;
};
// Every type (J,z), every product family Π_j R_j with ∅ != R_j ⊆ J cut down to
// that type, and every I ⊆ J^c.
ZBoundSweep z_bound_exhaustive(int d, int q);

struct EntropyTerm {
  VertexId vertex = 0;
  double term_i = 0;
  double term_ii = 0;
  bool in_s = false;
  bool full_degree = true;
  bool caps_hold = true;
};
struct EntropyLossReport {
  std::vector<EntropyTerm> terms;  // v ∈ S^+, ascending
  double direct = 0;               // Ent(F)
  double bound = 0;                // ½ Σ (I + II)
  double gap = 0;                  // bound - direct
  bool bound_applicable = false;   // every vertex of S has full degree
  bool holds = true;
  std::vector<VertexId> flagged;   // vertices of S^+ whose neighbourhood leaves the ambient
};
// F is the colouring on S and a fixed symbol elsewhere; the law of F is the
// weighted empirical law of `samples` (uniform weights when empty).
EntropyLossReport entropy_loss_eval(const LatticeGraph& g, const VertexSet& s, const std::vector<Coloring>& samples,
                                    const std::vector<double>& weights = {});

// U_P = {u ∈ bad : u is P-even and f(N(u)) = interior side of P}, per atlas pattern.
std::vector<VertexSet> u_p_sets(const LatticeGraph& g, const Atlas& atlas, const Coloring& f);

}  // namespace chroma
