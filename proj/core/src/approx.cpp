#include "chroma/approx.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "chroma/errors.hpp"
#include "chroma/parallel.hpp"

namespace chroma {

int boundary_parity(SetParity p) { return p == SetParity::Odd ? 1 : 0; }

namespace {

VertexSet parity_part(const LatticeGraph& g, const VertexSet& u, int parity) {
  return u & (parity == 0 ? g.even_vertices() : g.odd_vertices());
}

}  // namespace

RegularityResult regularity_check(const LatticeGraph& g, const VertexSet& u, SetParity parity) {
  const int bp = boundary_parity(parity);
  const VertexSet inner = plus(g, parity_part(g, u, 1 - bp));
  const VertexSet comp = u.complement();
  const VertexSet outer = plus(g, parity_part(g, comp, bp));
  RegularityResult r;
  VertexSet diff = (inner - u) | (u - inner) | (outer - comp) | (comp - outer);
  r.regular = diff.empty();
  r.witness = diff.first();
  return r;
}

bool is_parity_set(const LatticeGraph& g, const VertexSet& u, SetParity parity) {
  const int bp = boundary_parity(parity);
  bool ok = true;
  internal_boundary(g, u).for_each([&](VertexId v) { ok = ok && g.parity(v) == bp; });
  return ok;
}

OddSetCollection::OddSetCollection(const LatticeGraph& g, std::vector<VertexSet> sets, SetParity parity)
    : sets_(std::move(sets)), parity_(parity) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].ambient_size() != g.num_vertices()) throw PreconditionError("set from a different ambient");
    auto r = regularity_check(g, sets_[i], parity_);
    if (!r.regular)
      throw PreconditionError("set " + std::to_string(i) + " is not regular (vertex " + std::to_string(r.witness) +
                              ")");
  }
}

int boundary_degree(const LatticeGraph& g, const std::vector<VertexSet>& sets, VertexId v) {
  int k = 0;
  for (VertexId x : g.slots(v)) {
    if (x == kNoVertex) continue;
    for (const auto& s : sets)
      if (s.contains(v) != s.contains(x)) {
        ++k;
        break;
      }
  }
  return k;
}

bool separates(const LatticeGraph& g, const VertexSet& w, const std::vector<VertexSet>& sets, DirectedEdge* witness) {
  for (const auto& s : sets)
    for (const auto& e : out_edges(g, s))
      if (!w.contains(e.from) && !w.contains(e.to)) {
        if (witness) *witness = e;
        return false;
      }
  return true;
}

RevealedResult revealed_vertices(const LatticeGraph& g, const VertexSet& s, SetParity parity) {
  if (!is_parity_set(g, s, parity)) throw PreconditionError("set is not of the requested parity");
  RevealedResult r{VertexSet(g.num_vertices()), true, true};
  const std::vector<VertexSet> one{s};
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (boundary_degree(g, one, v) >= g.dimension()) r.revealed.insert(v);
  for (const auto& e : out_edges(g, s)) {
    if (g.on_face(e.from) || g.on_face(e.to)) {
      r.separation_applicable = false;
      continue;
    }
    if (!r.revealed.contains(e.from) && !r.revealed.contains(e.to)) r.separates = false;
  }
  // Restricted to full-degree edges the property always holds.
  if (!r.separates) {
    bool interior_failure = false;
    for (const auto& e : out_edges(g, s))
      if (!g.on_face(e.from) && !g.on_face(e.to) && !r.revealed.contains(e.from) && !r.revealed.contains(e.to))
        interior_failure = true;
    if (interior_failure)
      throw InvariantViolation("revealed vertices miss an interior boundary edge");
  }
  if (!r.separation_applicable) {
    DirectedEdge w;
    r.separates = separates(g, r.revealed, one, &w);
  }
  return r;
}

FourCycleResult four_cycle_check(const LatticeGraph& g, const VertexSet& s, SetParity parity) {
  if (!is_parity_set(g, s, parity)) throw PreconditionError("set is not of the requested parity");
  FourCycleResult r;
  const std::vector<VertexSet> one{s};
  for (const auto& e : out_edges(g, s)) {
    ++r.edges_checked;
    for (int slot = 0; slot < g.slot_count(); ++slot) {
      const VertexId a = g.neighbor(e.from, slot), b = g.neighbor(e.to, slot);
      if (a == kNoVertex || b == kNoVertex) {
        ++r.directions_skipped;
        continue;
      }
      ++r.directions_checked;
      const bool first = s.contains(e.from) != s.contains(a);
      const bool second = s.contains(e.to) != s.contains(b);
      if (!first && !second && r.holds) {
        r.holds = false;
        r.witness = e;
      }
    }
    if (!g.on_face(e.from) && !g.on_face(e.to) &&
        boundary_degree(g, one, e.from) + boundary_degree(g, one, e.to) < g.slot_count())
      r.degree_sum_holds = false;
  }
  if (!r.holds || !r.degree_sum_holds)
    throw InvariantViolation("four-cycle property fails at edge (" + std::to_string(r.witness.from) + "," +
                             std::to_string(r.witness.to) + ")");
  return r;
}

VertexSet greedy_cover(const LatticeGraph& g, const VertexSet& candidates, int t) {
  VertexSet uncovered = n_t(g, candidates, t);
  VertexSet chosen(g.num_vertices());
  const auto cand = candidates.ids();
  while (!uncovered.empty()) {
    VertexId best = kNoVertex;
    int best_gain = 0;
    for (VertexId c : cand) {
      int gain = 0;
      for (VertexId x : g.neighbors(c)) gain += uncovered.contains(x);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == kNoVertex) throw InvariantViolation("greedy cover stalled");
    chosen.insert(best);
    for (VertexId x : g.neighbors(best)) uncovered.erase(x);
  }
  return chosen;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// One half of the covering construction: handles ∪ (S_i ∩ S_i^rev) for sets
// whose internal boundary has parity bp.
struct HalfCover {
  VertexSet b, b1, b2;
};

HalfCover half_cover(const LatticeGraph& g, const std::vector<VertexSet>& sets, int bp, double s, int t) {
  const std::size_t n = g.num_vertices();
  const int deg = g.slot_count();
  const std::size_t m = sets.size();
  const int ip = 1 - bp;
  VertexSet a(n);
  std::vector<VertexSet> ai(m, VertexSet(n));
  VertexSet any_ai(n);
  for (VertexId v = 0; v < n; ++v) {
    if (g.parity(v) == ip && boundary_degree(g, sets, v) >= s) a.insert(v);
    if (g.parity(v) == bp)
      for (std::size_t i = 0; i < m; ++i)
        if (boundary_edges_at(g, sets[i], v) >= deg - s) {
          ai[i].insert(v);
          any_ai.insert(v);
        }
  }
  VertexSet tset(n), tprime(n);
  any_ai.for_each([&](VertexId w) {
    const auto slots = g.slots(w);
    std::vector<Bits> idx(slots.size(), Bits(m));
    int mw = 0;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k] == kNoVertex) continue;
      for (std::size_t i = 0; i < m; ++i)
        if (ai[i].contains(w) && sets[i].contains(slots[k])) idx[k].set(i);
      if (idx[k].any()) ++mw;
    }
    if (mw >= 1 && mw <= 2 * s) tprime.insert(w);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k] == kNoVertex) continue;
      int mwv = 0;
      for (std::size_t z = 0; z < slots.size(); ++z)
        if (slots[z] != kNoVertex && !idx[z].is_subset_of(idx[k])) ++mwv;
      if (2 * mwv < mw) tset.insert(slots[k]);
    }
  });
  HalfCover h;
  h.b = greedy_cover(g, a, t);
  h.b1 = greedy_cover(g, tset, t);
  h.b2 = VertexSet(n);
  for (std::size_t i = 0; i < m; ++i) h.b2 |= sets[i] & n_t(g, ai[i] & tprime, t);
  return h;
}

}  // namespace

SeparatingResult separating_set(const LatticeGraph& g, const OddSetCollection& coll, const SeparatingParams& params) {
  const int d = g.dimension();
  const std::size_t n = g.num_vertices();
  SeparatingResult r;
  r.s = params.s > 0 ? params.s : std::sqrt(static_cast<double>(d));
  r.t = params.t > 0 ? params.t : d / 6.0;
  if (r.t < 1) {
    r.clamped = true;
    r.warnings.push_back("t=" + std::to_string(r.t) + " below 1 at d=" + std::to_string(d) + "; clamped to 1");
    r.t = 1;
  }
  const int t = static_cast<int>(std::ceil(r.t - 1e-12));
  const auto& sets = coll.sets();
  {
    std::set<Edge> all;
    for (const auto& s : sets)
      for (const auto& e : edge_boundary(g, s)) all.insert(e);
    r.boundary_edges = static_cast<long long>(all.size());
  }
  r.u = VertexSet(n);
  if (sets.empty() || r.boundary_edges == 0) {
    r.separator = VertexSet(n);
    r.within_size_bound = true;
    return r;
  }
  const int bp = boundary_parity(coll.parity());
  std::vector<VertexSet> comps;
  for (const auto& s : sets) comps.push_back(s.complement());
  const HalfCover inner = half_cover(g, sets, bp, r.s, t);
  const HalfCover outer = half_cover(g, comps, 1 - bp, r.s, t);
  r.b_size = (inner.b | outer.b).size();
  r.b1_size = (inner.b1 | outer.b1).size();
  r.b2_size = (inner.b2 | outer.b2).size();
  r.u = inner.b | inner.b1 | inner.b2 | outer.b | outer.b1 | outer.b2;

  for (;;) {
    DirectedEdge e;
    if (separates(g, neighborhood(g, r.u), sets, &e)) break;
    r.u.insert(e.to);
    ++r.fallback_additions;
  }
  if (r.fallback_additions > 0)
    r.warnings.push_back(std::to_string(r.fallback_additions) + " vertices added after the covering step");
  r.separator = neighborhood(g, r.u);

  VertexSet bb(n);
  for (const auto& s : sets) bb |= vertex_boundaries(g, s).both;
  if (!r.u.is_subset_of(plus(g, bb))) throw InvariantViolation("separating set leaves the boundary neighbourhood");
  r.size_bound = r.boundary_edges * params.constant * std::pow(d, -1.5) * std::log(static_cast<double>(d));
  r.within_size_bound = r.u.size() <= r.size_bound;
  return r;
}

WeakApproximation weak_approximation(const LatticeGraph& g, const VertexSet& w, const OddSetCollection& coll) {
  const auto& sets = coll.sets();
  DirectedEdge e;
  if (!separates(g, w, sets, &e))
    throw PreconditionError("W does not separate the collection: edge (" + std::to_string(e.from) + "," +
                            std::to_string(e.to) + ")");
  const std::size_t n = g.num_vertices();
  WeakApproximation a;
  a.parts.assign(sets.size(), VertexSet(n));
  a.star = w;
  const auto d = static_cast<std::size_t>(g.dimension());
  for (const auto& comp : connected_components(g, w.complement())) {
    if (comp.size() <= d) {
      a.star |= comp;
      continue;
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (comp.is_subset_of(sets[i])) a.parts[i] |= comp;
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!a.parts[i].is_subset_of(sets[i]) || !sets[i].is_subset_of(a.parts[i] | a.star))
      throw InvariantViolation("weak approximation containment fails for set " + std::to_string(i));
  a.size_bound = a.star.size() <= 3 * w.size();
  a.location_bound = a.star.is_subset_of(plus(g, w));
  return a;
}

namespace {

// Upgrade of a weak approximation for a known collection: trims A_* next to
// exterior boundary-parity vertices, then grows the parts by a maximal set of
// inner-parity vertices W with d|W| <= |A_* ∩ W^+|.
WeakApproximation upgrade(const LatticeGraph& g, const WeakApproximation& weak, const OddSetCollection& coll) {
  const std::size_t n = g.num_vertices();
  const int bp = boundary_parity(coll.parity());
  const int d = g.dimension();
  const auto& sets = coll.sets();
  VertexSet known(n);
  for (const auto& p : weak.parts) known |= p;
  const VertexSet outside = parity_part(g, (known | weak.star).complement(), bp);
  WeakApproximation b = weak;
  b.star = weak.star - neighborhood(g, outside);

  VertexSet in_union(n);
  for (const auto& s : sets) in_union |= s;
  const auto cand = parity_part(g, b.star & in_union, 1 - bp).ids();
  VertexSet chosen(n);
  for (bool grew = true; grew;) {
    grew = false;
    for (VertexId v : cand) {
      if (chosen.contains(v)) continue;
      VertexSet trial = chosen;
      trial.insert(v);
      if (static_cast<std::size_t>(d) * trial.size() <= (b.star & plus(g, trial)).size()) {
        chosen = trial;
        grew = true;
      }
    }
  }
  const VertexSet chosen_plus = plus(g, chosen);
  const VertexSet ring = parity_part(g, n_t(g, b.star - chosen_plus, d), 1 - bp);
  for (std::size_t i = 0; i < sets.size(); ++i) b.parts[i] |= plus(g, chosen & sets[i]);
  b.star -= ring;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!b.parts[i].is_subset_of(sets[i]) || !sets[i].is_subset_of(b.parts[i] | b.star))
      throw InvariantViolation("upgraded approximation containment fails for set " + std::to_string(i));
  return b;
}

}  // namespace

Approximation approximate_atlas(const LatticeGraph& g, const Atlas& x, const VertexSet& w) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexSet> sets[2];
  std::vector<std::size_t> index[2];
  for (std::size_t i = 0; i < x.patterns.size(); ++i) {
    const int cls = x.patterns[i].pattern_class();
    sets[cls].push_back(x.regions[i]);
    index[cls].push_back(i);
  }
  Approximation a;
  a.patterns = x.patterns;
  a.a_p.assign(x.patterns.size(), VertexSet(n));
  VertexSet star[2] = {VertexSet(n), VertexSet(n)};
  for (int cls = 0; cls < 2; ++cls) {
    // Class-1 regions are odd sets, class-0 regions even sets.
    const OddSetCollection coll(g, sets[cls], cls == 1 ? SetParity::Odd : SetParity::Even);
    const WeakApproximation up = upgrade(g, weak_approximation(g, w, coll), coll);
    for (std::size_t k = 0; k < index[cls].size(); ++k) a.a_p[index[cls][k]] = up.parts[k];
    star[cls] = up.star;
  }
  a.a_star = (star[0] & g.odd_vertices()) | (star[1] & g.even_vertices());
  a.a_2star = star[0] | star[1];
  return a;
}

void validate_approximation(const LatticeGraph& g, const Approximation& a) {
  if (a.patterns.size() != a.a_p.size()) throw PreconditionError("pattern and region counts differ");
  if (!a.a_star.is_subset_of(a.a_2star)) throw PreconditionError("A* is not contained in A**");
  for (std::size_t i = 0; i < a.patterns.size(); ++i) {
    const SetParity par = a.patterns[i].even_parity() == 1 ? SetParity::Odd : SetParity::Even;
    if (!is_parity_set(g, a.a_p[i], par))
      throw PreconditionError("region for " + a.patterns[i].to_string() + " is not P-even");
  }
}

ApproximationReport verify_approximation(const LatticeGraph& g, const Approximation& a, const Atlas& x,
                                         double size_constant) {
  const std::size_t n = g.num_vertices();
  const int d = g.dimension();
  ApproximationReport r;
  ClauseResult c1, c2, c3, c4;
  c1.clause = "A1";
  c2.clause = "A2";
  c3.clause = "A3";
  c4.clause = "A4";
  auto fail = [](ClauseResult& c, VertexId v, const std::string& detail) {
    if (!c.holds) return;
    c.holds = false;
    c.witness = v;
    c.detail = detail;
  };
  VertexSet known[2] = {VertexSet(n), VertexSet(n)};
  for (std::size_t i = 0; i < a.patterns.size(); ++i) known[a.patterns[i].pattern_class()] |= a.a_p[i];
  for (std::size_t i = 0; i < a.patterns.size(); ++i) {
    const Pattern& p = a.patterns[i];
    const int xi = x.index_of(p);
    const VertexSet xp = xi >= 0 ? x.regions[xi] : VertexSet(n);
    const VertexSet p_even = p.even_parity() == 0 ? g.even_vertices() : g.odd_vertices();
    const VertexSet p_odd = p_even.complement();
    VertexSet extra = a.a_p[i] - xp;
    if (!extra.empty()) fail(c1, extra.first(), "A_P not inside X_P for " + p.to_string());
    extra = xp - (a.a_p[i] | (p_odd & a.a_star) | (p_even & a.a_2star));
    if (!extra.empty()) fail(c1, extra.first(), "X_P not covered for " + p.to_string());
    extra = (p_odd & a.a_star) - n_t(g, known[p.pattern_class()], d);
    if (!extra.empty()) fail(c2, extra.first(), "P-odd vertex of A* with few known neighbours for " + p.to_string());
  }
  const AtlasClass cls = classify_atlas(g, x);
  r.l = cls.l;
  const double bound = size_constant * cls.l * std::log(static_cast<double>(d)) / std::sqrt(static_cast<double>(d));
  if (static_cast<double>(a.a_2star.size()) > bound)
    fail(c3, a.a_2star.first(), "|A**|=" + std::to_string(a.a_2star.size()) + " exceeds " + std::to_string(bound));
  VertexSet near(n);
  for (const auto& reg : x.regions) near |= vertex_boundaries(g, reg).both;
  const VertexSet far = a.a_2star - expand(g, near, 3);
  if (!far.empty()) fail(c4, far.first(), "A** vertex farther than 3 from every region boundary");
  r.clauses = {c1, c2, c3, c4};
  for (const auto& c : r.clauses) r.ok = r.ok && c.holds;
  return r;
}

IsoperimetryReport isoperimetry_checks(const LatticeGraph& g, const VertexSet& u) {
  const int d = g.dimension();
  IsoperimetryReport r;
  r.odd = is_parity_set(g, u, SetParity::Odd);
  r.padded = !g.any_periodic() && !plus(g, u).intersects(g.face_layer());
  r.contains_even = u.intersects(g.even_vertices());
  r.boundary = static_cast<long long>(edge_boundary(g, u).size());
  r.boundary_rhs = 2LL * d * (2 * d - 1);
  r.boundary_applicable = r.odd && r.padded && r.contains_even;
  if (r.boundary_applicable) r.boundary_holds = r.boundary >= r.boundary_rhs;

  r.diameter_applicable = r.odd && r.padded && !u.empty() && is_connected(g, u, 2);
  if (r.diameter_applicable) {
    VertexSet iso(g.num_vertices());
    u.for_each([&](VertexId v) {
      bool lonely = true;
      for (VertexId x : g.neighbors(v)) lonely = lonely && !u.contains(x);
      if (lonely) iso.insert(v);
    });
    r.diameter_lhs = r.boundary + static_cast<long long>(edge_boundary(g, plus(g, iso)).size());
    r.diameter_rhs = 0.5 * (d - 1) * (d - 1) * (2 + diameter(g, u));
    r.diameter_holds = r.diameter_lhs >= r.diameter_rhs;
  }
  return r;
}

std::vector<VertexSet> enumerate_regular_sets(const LatticeGraph& g, SetParity parity) {
  const std::size_t n = g.num_vertices();
  if (n > 16) throw PreconditionError("exhaustive enumeration is limited to 16 vertices");
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1u) s.insert(static_cast<VertexId>(v));
    if (regularity_check(g, s, parity).regular) out.push_back(std::move(s));
  }
  return out;
}

WeakFamilyReport weak_approximation_family(const LatticeGraph& g, const VertexSet& w) {
  WeakFamilyReport r;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& s : enumerate_regular_sets(g, SetParity::Odd)) {
    if (!separates(g, w, {s})) continue;
    ++r.sets_separated;
    const auto a = weak_approximation(g, w, OddSetCollection(g, {s}));
    seen.insert({a.parts[0].to_string(), a.star.to_string()});
  }
  r.distinct_approximations = seen.size();
  r.family_bound = std::pow(4.0, static_cast<double>(w.size()) / g.dimension());
  return r;
}

}  // namespace chroma
