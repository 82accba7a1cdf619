#include "chroma_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "chroma/approx.hpp"
#include "chroma/coloring.hpp"
#include "chroma/decomposition.hpp"
#include "chroma/entropy.hpp"
#include "chroma/errors.hpp"
#include "chroma/exact.hpp"
#include "chroma/generators.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"
#include "chroma/rng.hpp"

namespace chroma::cli {

OrderedJson SuiteResult::to_json() const {
  OrderedJson j;
  j["name"] = name;
  j["trials"] = trials;
  j["checks"] = checks;
  j["failures"] = failures;
  j["passed"] = passed();
  j["first_failure"] = first_failure.empty() ? OrderedJson(nullptr) : OrderedJson(first_failure);
  j["details"] = details;
  return j;
}

namespace {

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what();
  }
  // Runs body, counting a thrown InvariantViolation as a failed check.
  void guarded(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const InvariantViolation& e) {
      check(false, [&] { return label + ": " + e.what(); });
    }
  }

 private:
  SuiteResult& r_;
};

LatticeGraph cube(int d, int side, bool periodic = false) {
  return LatticeGraph(std::vector<int>(d, side), std::vector<bool>(d, periodic));
}

// Boxes leaving room for sets kept `margin` away from the face layer.
LatticeGraph padded_box(int d, int margin = 2) {
  switch (d) {
    case 2: return cube(2, 5 + 2 * margin);
    case 3: return cube(3, 3 + 2 * margin);
    default: return cube(4, 1 + 2 * margin);
  }
}

VertexSet random_subset(const LatticeGraph& g, Rng& rng, double p) {
  VertexSet u(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (rng.unit() < p) u.insert(v);
  return u;
}

VertexSet far_from_face(const LatticeGraph& g, int margin) {
  const auto dist = bfs_distances(g, g.face_layer());
  VertexSet out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (dist[v] >= margin) out.insert(v);
  return out;
}

std::string describe(const LatticeGraph& g, const VertexSet& u) { return g.spec_string() + " U={" + u.to_string() + "}"; }

SetParity pick_parity(long long i) { return i % 2 == 0 ? SetParity::Odd : SetParity::Even; }

void four_cycle_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  long long edges = 0, skipped = 0;
  for (long long i = 0; i < trials; ++i) {
    const int d = 2 + static_cast<int>(i % 3);
    const LatticeGraph g = padded_box(d);
    const SetParity parity = pick_parity(i / 3);
    const VertexSet s = random_regular_set(g, rng, parity, 0.1 + 0.4 * rng.unit(), 2);
    t.guarded("four-cycle " + describe(g, s), [&] {
      FourCycleResult fc = four_cycle_check(g, s, parity);
      edges += fc.edges_checked;
      skipped += fc.directions_skipped;
      t.check(fc.holds && fc.degree_sum_holds, [&] { return "four-cycle " + describe(g, s); });
    });
  }
  r.details["edges_checked"] = edges;
  r.details["directions_skipped"] = skipped;
}

void revealed_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  long long applicable = 0;
  for (long long i = 0; i < trials; ++i) {
    const int d = 2 + static_cast<int>(i % 3);
    const LatticeGraph g = padded_box(d, 3);
    const SetParity parity = pick_parity(i / 3);
    // Margin 3 keeps both endpoints of every boundary edge at full degree.
    const VertexSet s = random_regular_set(g, rng, parity, 0.1 + 0.4 * rng.unit(), 3);
    t.guarded("revealed " + describe(g, s), [&] {
      RevealedResult rv = revealed_vertices(g, s, parity);
      if (rv.separation_applicable) ++applicable;
      const bool direct = separates(g, rv.revealed, {s});
      t.check(rv.separation_applicable && rv.separates && direct, [&] { return "revealed " + describe(g, s); });
    });
  }
  r.details["separation_applicable"] = applicable;
}

void even_odd_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  const std::vector<LatticeGraph> boxes = {cube(2, 8), cube(3, 6), cube(4, 4)};
  const std::vector<LatticeGraph> tori = {cube(2, 6, true), cube(3, 4, true),
                                          LatticeGraph({6, 4, 8}, {true, true, true})};
  for (long long i = 0; i < trials; ++i) {
    const bool torus = i % 2 == 1;
    const LatticeGraph& g = torus ? tori[(i / 2) % tori.size()] : boxes[(i / 2) % boxes.size()];
    VertexSet u = torus ? random_subset(g, rng, rng.unit()) : random_subset(g, rng, rng.unit()) & far_from_face(g, 1);
    EdgeBoundaryReport rep = edge_boundaries(g, u, u.complement());
    t.check(rep.identity_applicable && rep.identity_holds, [&] { return "even-odd " + describe(g, u); });
  }
}

void sizes_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  const std::vector<LatticeGraph> graphs = {cube(2, 6), cube(2, 6, true), cube(3, 4), cube(3, 4, true), cube(4, 3),
                                            LatticeGraph({2, 5}, {true, false})};
  for (long long i = 0; i < trials; ++i) {
    const LatticeGraph& g = graphs[i % graphs.size()];
    const VertexSet u = random_subset(g, rng, 0.05 + 0.5 * rng.unit());
    const int delta = g.max_degree();
    const int tt = 1 + static_cast<int>(rng.below(delta));
    const long long lhs = static_cast<long long>(tt) * n_t(g, u, tt).size();
    const long long rhs = static_cast<long long>(delta) * u.size();
    t.check(lhs <= rhs, [&] { return "sizes t=" + std::to_string(tt) + " " + describe(g, u); });
  }
}

std::set<DirectedEdge> edge_set(const std::vector<DirectedEdge>& v) { return {v.begin(), v.end()}; }

bool includes(const std::set<DirectedEdge>& small, const std::set<DirectedEdge>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void co_connected_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  const std::vector<LatticeGraph> graphs = {cube(2, 8), cube(3, 5), cube(2, 6, true)};
  long long co_connected_b = 0, connected_b = 0;
  for (long long i = 0; i < trials; ++i) {
    const LatticeGraph& g = graphs[i % graphs.size()];
    const std::size_t n = g.num_vertices();
    const VertexSet a = random_connected_set(g, 1 + rng.below(n / 3), rng);
    const VertexSet rest = a.complement();
    // Alternate connected B with arbitrary B so (c) and (d) both get exercised.
    const VertexSet b = i % 2 == 0 ? random_connected_set(g, 1 + rng.below(n / 3), rng, rest)
                                   : random_subset(g, rng, 0.4 * rng.unit()) & rest;
    const auto pool = rest.ids();
    const VertexId v = pool[rng.below(pool.size())];
    const VertexSet closure = co_connected_closure(g, a, v);
    const std::string what = g.spec_string() + " A={" + a.to_string() + "} B={" + b.to_string() +
                             "} v=" + std::to_string(v);
    t.check(a.is_subset_of(closure) && is_co_connected(g, closure), [&] { return "closure " + what; });
    t.check(includes(edge_set(out_edges(g, closure)), edge_set(out_edges(g, a))), [&] { return "(a) " + what; });
    const VertexSet b_rest = b - closure;
    t.check(includes(edge_set(out_edges(g, b_rest)), edge_set(out_edges(g, b))), [&] { return "(b) " + what; });
    if (is_co_connected(g, b)) {
      ++co_connected_b;
      t.check(is_co_connected(g, b_rest), [&] { return "(c) " + what; });
    }
    if (!b.empty() && is_connected(g, b)) {
      ++connected_b;
      t.check(b.is_subset_of(closure) || !b.intersects(closure), [&] { return "(d) " + what; });
    }
  }
  r.details["co_connected_b"] = co_connected_b;
  r.details["connected_b"] = connected_b;
}

void boundary_connected_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  const std::vector<LatticeGraph> graphs = {cube(2, 10), cube(3, 6), cube(2, 7), cube(3, 5)};
  for (long long i = 0; i < trials; ++i) {
    const LatticeGraph& g = graphs[i % graphs.size()];
    const VertexSet inner = far_from_face(g, 2);
    const VertexSet c = random_connected_set(g, 1 + rng.below(inner.size()), rng, inner);
    const VertexSet a = co_connected_closure(g, c, g.face_layer().first());
    const VertexSet both = vertex_boundaries(g, a).both;
    t.check(is_connected(g, a) && is_co_connected(g, a) && is_connected(g, both),
            [&] { return "boundary-connected " + describe(g, a); });
  }
}

void isoperimetry_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  OrderedJson plus_shapes = OrderedJson::array();
  for (int d = 2; d <= 5; ++d) {
    const LatticeGraph g = cube(d, 5);
    const VertexId centre = g.id(std::vector<int>(d, 2));
    VertexSet u(g.num_vertices());
    u.insert(centre);
    u = plus(g, u);
    const long long boundary = static_cast<long long>(edge_boundary(g, u).size());
    const long long expected = 2LL * d * (2 * d - 1);
    t.check(boundary == expected, [&] { return "|∂(v^+)| in d=" + std::to_string(d); });
    plus_shapes.push_back({{"d", d}, {"boundary", boundary}, {"expected", expected}});
  }
  long long boundary_applied = 0, diameter_applied = 0;
  for (long long i = 0; i < trials; ++i) {
    const int d = 2 + static_cast<int>(i % 2);
    const LatticeGraph g = d == 2 ? cube(2, 11) : cube(3, 8);
    const VertexSet u = random_regular_set(g, rng, SetParity::Odd, 0.05 + 0.3 * rng.unit(), 3);
    IsoperimetryReport rep = isoperimetry_checks(g, u);
    boundary_applied += rep.boundary_applicable;
    diameter_applied += rep.diameter_applicable;
    t.check((!rep.boundary_applicable || rep.boundary_holds) && (!rep.diameter_applicable || rep.diameter_holds),
            [&] { return "isoperimetry " + describe(g, u); });
  }
  r.details["plus_shapes"] = plus_shapes;
  r.details["boundary_applicable"] = boundary_applied;
  r.details["diameter_applicable"] = diameter_applied;
}

FiniteDistribution random_distribution(Rng& rng, int n, int alphabet) {
  std::map<Outcome, double> p;
  Outcome o(n, 0);
  double total = 0;
  while (true) {
    // Sparse supports exercise zero-probability outcomes.
    double w = rng.unit() < 0.3 ? 0.0 : rng.unit();
    if (w > 0) {
      p[o] = w;
      total += w;
    }
    int k = n;
    while (k > 0 && ++o[k - 1] == alphabet) o[--k] = 0;
    if (k == 0) break;
  }
  if (total == 0) {
    p[Outcome(n, 0)] = 1;
    total = 1;
  }
  for (auto& [_, w] : p) w /= total;
  return FiniteDistribution::from_probabilities(std::move(p));
}

std::vector<std::vector<int>> random_cover(Rng& rng, int n, int& k) {
  std::vector<std::vector<int>> cover;
  std::vector<int> hits(n, 0);
  const int parts = 1 + static_cast<int>(rng.below(6));
  auto add_random = [&] {
    std::vector<int> part;
    for (int i = 0; i < n; ++i)
      if (rng.coin()) part.push_back(i);
    if (part.empty()) part.push_back(static_cast<int>(rng.below(n)));
    for (int i : part) ++hits[i];
    cover.push_back(std::move(part));
  };
  for (int i = 0; i < parts; ++i) add_random();
  while (*std::min_element(hits.begin(), hits.end()) == 0) add_random();
  k = *std::min_element(hits.begin(), hits.end());
  return cover;
}

std::vector<std::vector<int>> all_subsets_of_size(int n, int m) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

long long binomial(int n, int k) {
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

void shearer_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  double worst_slack = 0;
  for (long long i = 0; i < trials; ++i) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const int alphabet = 2 + static_cast<int>(rng.below(2));
    FiniteDistribution d = random_distribution(rng, n, alphabet);
    int k = 0;
    auto cover = random_cover(rng, n, k);
    ShearerResult s = shearer_check(d, cover, k);
    worst_slack = std::max(worst_slack, s.lhs - s.rhs);
    t.check(s.holds, [&] { return "shearer n=" + std::to_string(n) + " trial " + std::to_string(i); });
  }
  double worst_equality = 0;
  for (int n = 2; n <= 5; ++n)
    for (int alphabet = 2; alphabet <= 3; ++alphabet)
      for (int m = 1; m <= n; ++m) {
        std::vector<Outcome> outcomes;
        Outcome o(n, 0);
        while (true) {
          outcomes.push_back(o);
          int j = n;
          while (j > 0 && ++o[j - 1] == alphabet) o[--j] = 0;
          if (j == 0) break;
        }
        FiniteDistribution d = FiniteDistribution::uniform(outcomes);
        ShearerResult s = shearer_check(d, all_subsets_of_size(n, m), static_cast<int>(binomial(n - 1, m - 1)));
        worst_equality = std::max(worst_equality, std::abs(s.lhs - s.rhs));
        t.check(s.holds && std::abs(s.lhs - s.rhs) <= 1e-10, [&] {
          return "equality n=" + std::to_string(n) + " m=" + std::to_string(m) + " alphabet=" + std::to_string(alphabet);
        });
      }
  r.details["max_lhs_minus_rhs"] = worst_slack;
  r.details["max_equality_gap"] = worst_equality;
}

void chain_rule_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  double worst = 0;
  for (long long i = 0; i < trials; ++i) {
    const int n = 2 + static_cast<int>(rng.below(4));
    FiniteDistribution d = random_distribution(rng, n, 2 + static_cast<int>(rng.below(2)));
    std::vector<int> y, z;
    for (int c = 0; c < n; ++c) (rng.coin() ? y : z).push_back(c);
    if (y.empty()) y.push_back(z.back()), z.pop_back();
    if (z.empty()) z.push_back(y.back()), y.pop_back();
    std::vector<int> yz = y;
    yz.insert(yz.end(), z.begin(), z.end());
    const double gap = std::abs(shannon_entropy(d, yz) - shannon_entropy(d, y) - conditional_entropy(d, z, y));
    worst = std::max(worst, gap);
    t.check(gap <= 1e-10, [&] { return "chain rule trial " + std::to_string(i); });
  }
  r.details["max_gap"] = worst;
}

void z_bounds_suite(SuiteResult& r) {
  OrderedJson sweeps = OrderedJson::array();
  for (auto [d, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}}) {
    ZBoundSweep s = z_bound_exhaustive(d, q);
    r.checks += s.checks;
    if (s.failures > 0 && r.failures == 0) r.first_failure = s.first_failure;
    r.failures += s.failures;
    sweeps.push_back({{"d", d}, {"q", q}, {"families", s.families}, {"checks", s.checks}, {"failures", s.failures}});
  }
  r.details["sweeps"] = sweeps;
}

// P0 colouring cycling through each side along axis 0. Random P0 colourings
// are not defect-free: a vertex whose neighbours share one colour is the core
// of another dominant pattern. Here every vertex sees a whole side when the
// sides have at most two colours.
Coloring balanced_pattern_coloring(const LatticeGraph& g, const Pattern& p0) {
  Coloring f(p0.q, g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto side = colors_of(p0.side_for_parity(g.parity(v)));
    f[v] = static_cast<Color>(side[g.coord(v, 0) % side.size()]);
  }
  return f;
}

void breakup_suite(SuiteResult& r, long long trials, Rng& rng) {
  Tally t(r);
  const std::vector<LatticeGraph> graphs = {cube(2, 6), cube(3, 4)};
  const int radii[] = {1, 2, 5};
  long long nontrivial = 0, defects_checked = 0, pure = 0, star_free = 0;
  for (long long i = 0; i < trials; ++i) {
    const LatticeGraph& g = graphs[i % 2];
    const int q = 3 + static_cast<int>((i / 2) % 3);
    const int radius = radii[(i / 6) % 3];
    const auto p0s = dominant_class(q, 0);
    const Pattern p0 = p0s[rng.below(p0s.size())];
    const VertexSet domain = g.all();
    const std::uint64_t seed = rng.next();
    const bool pure_input = i % 10 == 9;
    Coloring f = pure_input ? balanced_pattern_coloring(g, p0)
                            : random_coloring(g, domain, p0, 1 + static_cast<long long>(rng.below(20)), seed);
    // V: one vertex, preferring a defect so that the vertex clause has work to do.
    VertexSet v(g.num_vertices());
    VertexSet defects = domain - pattern_vertices(g, f, p0);
    if (!defects.empty() && rng.coin()) {
      auto ids = defects.ids();
      v.insert(ids[rng.below(ids.size())]);
    } else {
      v.insert(static_cast<VertexId>(rng.below(g.num_vertices())));
    }
    const std::string what = "breakup " + g.spec_string() + " q=" + std::to_string(q) + " p0=" + p0.to_string() +
                             " r=" + std::to_string(radius) + " V={" + v.to_string() + "} f=" +
                             write_coloring(g, f);
    t.guarded(what, [&] {
      const Atlas x = construct_breakup(g, f, v, domain, p0, radius);
      const BreakupReport rep = verify_breakup(g, x, f, domain, p0, radius, &v);
      t.check(rep.ok, [&] {
        return what + " clause " + (rep.violations.empty() ? std::string("?") : rep.violations.front().clause);
      });

      const Atlas z = decompose(g, f);
      const VertexSet seen = seen_from(g, z, v, radius);
      t.check(x.star == (z.star & seen), [&] { return what + " X_* != Z_* ∩ seen"; });

      const VertexSet vr = expand(g, v, radius);
      const bool should_be_nontrivial = !in_pattern(g, f, vr, p0) || vr.intersects(z.star);
      const AtlasClass cls = classify_atlas(g, x);
      nontrivial += cls.nontrivial;
      t.check(!should_be_nontrivial || !x.star.empty(), [&] { return what + " expected a non-trivial breakup"; });
      if (pure_input) {
        ++pure;
        if (q < 5) t.check(z.star.empty(), [&] { return what + " balanced input has defects"; });
      }
      if (z.star.empty()) {
        ++star_free;
        t.check(x.star.empty() && x.region(p0) == g.all(), [&] { return what + " defect-free input not trivial"; });
      }
      const VertexSet x0_only = x.region(p0) - x.overlap;
      vr.for_each([&](VertexId u) {
        if (vertex_in_pattern(g, f, u, p0)) return;
        ++defects_checked;
        t.check(!x0_only.contains(u), [&] { return what + " defect " + std::to_string(u) + " in X_P0 only"; });
      });
    });
  }
  r.details["nontrivial"] = nontrivial;
  r.details["pure_inputs"] = pure;
  r.details["defect_free_inputs"] = star_free;
  r.details["defect_vertices_checked"] = defects_checked;
}

VertexSet cells(const LatticeGraph& g, std::initializer_list<std::pair<int, int>> rc) {
  VertexSet s(g.num_vertices());
  for (auto [row, col] : rc) s.insert(g.id(std::vector<int>{row, col}));
  return s;
}

}  // namespace

RepairInstance repair_instance_4x4(const LatticeGraph& g, int q) {
  RepairInstance inst;
  inst.s = cells(g, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  const VertexSet top = cells(g, {{1, 0}, {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}});
  const VertexSet bottom = cells(g, {{2, 0}, {3, 0}, {3, 1}, {3, 2}, {3, 3}, {2, 3}});
  if (q == 3) {
    inst.p0 = Pattern::parse("A=1;B=2,3", 3);
    inst.parts = {{Pattern::parse("A=1,2;B=3", 3), top}, {inst.p0, bottom}};
  } else if (q == 4) {
    inst.p0 = Pattern::parse("A=1,2;B=3,4", 4);
    inst.parts = {{inst.p0, top}, {Pattern::parse("A=1,3;B=2,4", 4), bottom}};
  } else {
    throw PreconditionError("the fixed repair instance exists for q = 3 and q = 4");
  }
  inst.shift_axis = 0;
  inst.shift_direction = +1;
  return inst;
}

namespace {

void repair_suite(SuiteResult& r) {
  Tally t(r);
  const LatticeGraph g = cube(2, 4);
  OrderedJson per_q = OrderedJson::array();
  for (int q : {3, 4}) {
    const RepairInstance inst = repair_instance_4x4(g, q);
    const RepairLayout layout = repair_layout(g, inst);
    ColoringConstraint c = free_constraint(g, g.all(), q);
    for (const auto& part : inst.parts) restrict_constraint(g, c, plus(g, internal_boundary(g, part.region)), part.pattern);

    const VertexSet outside = g.all() - layout.s_plus;
    auto outside_of = [&](const Coloring& f) {
      Coloring o(q, g.num_vertices());
      outside.for_each([&](VertexId v) { o[v] = f[v]; });
      return o;
    };
    std::map<Coloring, Coloring> representative;  // f on (S^+)^c -> first f seen
    std::vector<Coloring> omega;
    enumerate_colorings(g, c, [&](const Coloring& f) { omega.push_back(f); });
    for (const auto& f : omega) representative.emplace(outside_of(f), f);

    const auto fillings = enumerate_fillings(g, layout, inst.p0, 1u << 20);
    long long even = 0, odd = 0;
    layout.filled.for_each([&](VertexId v) { (g.is_even(v) ? even : odd) += 1; });
    BigInt expected = 1;
    for (long long i = 0; i < even; ++i) expected *= q / 2;
    for (long long i = 0; i < odd; ++i) expected *= (q + 1) / 2;
    t.check(BigInt(fillings.size()) == expected && filling_count(g, layout, inst.p0) == expected.str(),
            [&] { return "filling count q=" + std::to_string(q); });

    long long collisions = 0, improper = 0, inverse_mismatch = 0, pairs = 0;
    std::map<Coloring, std::pair<const Coloring*, std::size_t>> images;
    for (const auto& [out, f] : representative) {
      for (std::size_t h = 0; h < fillings.size(); ++h) {
        ++pairs;
        Coloring image;
        try {
          image = repair_transform(g, inst, f, fillings[h]);
        } catch (const InvariantViolation&) {
          ++improper;
          continue;
        }
        auto [it, fresh] = images.emplace(image, std::make_pair(&out, h));
        if (!fresh) ++collisions;
        RepairPreimage pre = repair_inverse(g, inst, image);
        if (!(outside_of(pre.outside) == out)) ++inverse_mismatch;
        Coloring filled_only(q, g.num_vertices());
        layout.filled.for_each([&](VertexId v) { filled_only[v] = fillings[h][v]; });
        if (!(pre.filling == filled_only)) ++inverse_mismatch;
      }
    }
    // The transform reads f only on (S^+)^c: every f must agree with its representative.
    long long factor_mismatch = 0;
    for (const auto& f : omega) {
      const Coloring& rep = representative.at(outside_of(f));
      if (!(repair_transform(g, inst, f, fillings.front()) == repair_transform(g, inst, rep, fillings.front())))
        ++factor_mismatch;
    }
    t.check(collisions == 0, [&] { return "repair collisions q=" + std::to_string(q); });
    t.check(improper == 0, [&] { return "repair improper output q=" + std::to_string(q); });
    t.check(inverse_mismatch == 0, [&] { return "repair inverse q=" + std::to_string(q); });
    t.check(factor_mismatch == 0, [&] { return "repair depends on f inside S^+ q=" + std::to_string(q); });
    r.trials += static_cast<long long>(omega.size());
    per_q.push_back({{"q", q},
                     {"omega", omega.size()},
                     {"distinct_outside", representative.size()},
                     {"fillings", fillings.size()},
                     {"expected_fillings", expected.str()},
                     {"filled_even", even},
                     {"filled_odd", odd},
                     {"pairs", pairs},
                     {"images", images.size()},
                     {"collisions", collisions},
                     {"improper", improper}});
  }
  r.details["instances"] = per_q;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "four-cycle", "revealed", "even-odd", "sizes",    "co-connected", "boundary-connected", "isoperimetry",
      "shearer",    "chain-rule", "z-bounds", "breakup", "repair"};
  return names;
}

SuiteResult run_suite(const std::string& name, long long trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("trials must be positive");
  const auto& names = suite_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw PreconditionError("unknown suite '" + name + "'");
  SuiteResult r;
  r.name = name;
  r.trials = trials;
  Rng rng(seed, static_cast<std::uint64_t>(it - names.begin()));
  if (name == "four-cycle") four_cycle_suite(r, trials, rng);
  else if (name == "revealed") revealed_suite(r, trials, rng);
  else if (name == "even-odd") even_odd_suite(r, trials, rng);
  else if (name == "sizes") sizes_suite(r, trials, rng);
  else if (name == "co-connected") co_connected_suite(r, trials, rng);
  else if (name == "boundary-connected") boundary_connected_suite(r, trials, rng);
  else if (name == "isoperimetry") isoperimetry_suite(r, trials, rng);
  else if (name == "shearer") shearer_suite(r, trials, rng);
  else if (name == "chain-rule") chain_rule_suite(r, trials, rng);
  else if (name == "z-bounds") {
    r.trials = 0;
    z_bounds_suite(r);
  } else if (name == "breakup") breakup_suite(r, trials, rng);
  else {
    r.trials = 0;
    repair_suite(r);
  }
  return r;
}

std::vector<SuiteResult> run_suites(const std::string& name, long long trials, std::uint64_t seed) {
  if (name != "all") return {run_suite(name, trials, seed)};
  std::vector<SuiteResult> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, trials, seed));
  return out;
}

}  // namespace chroma::cli
