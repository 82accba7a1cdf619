#include "chroma/decomposition.hpp"

#include <algorithm>

#include "chroma/errors.hpp"
#include "chroma/parallel.hpp"

namespace chroma {

int Atlas::index_of(const Pattern& p) const {
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (patterns[i] == p) return static_cast<int>(i);
  return -1;
}

const VertexSet& Atlas::region(const Pattern& p) const {
  int i = index_of(p);
  if (i < 0) throw PreconditionError("pattern " + p.to_string() + " not in atlas");
  return regions[i];
}

void derive_sets(const LatticeGraph& g, Atlas& a) {
  const std::size_t n = g.num_vertices();
  std::vector<int> hits(n, 0);
  a.star = VertexSet(n);
  for (const auto& r : a.regions) {
    r.for_each([&](VertexId v) { ++hits[v]; });
    a.star |= vertex_boundaries(g, r).both;
  }
  a.overlap = VertexSet(n);
  a.bad = VertexSet(n);
  for (VertexId v = 0; v < n; ++v) {
    if (hits[v] >= 2) a.overlap.insert(v);
    if (hits[v] == 0) a.bad.insert(v);
  }
  a.star |= a.overlap;
  a.star |= a.bad;
}

VertexSet ordered_core(const LatticeGraph& g, const Coloring& f, const Pattern& p) {
  VertexSet core(g.num_vertices());
  const ColorSet bdry = p.boundary_side();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.parity(v) == p.even_parity()) continue;
    bool ok = true;
    for (VertexId w : g.slots(v))
      if (w != kNoVertex && !has_color(bdry, f[w])) ok = false;
    if (ok) core.insert(v);
  }
  return core;
}

Atlas decompose(const LatticeGraph& g, const Coloring& f, const std::vector<Pattern>& whitelist) {
  if (f.size() != g.num_vertices()) throw PreconditionError("coloring does not match graph");
  if (!is_total(f)) throw PreconditionError("decomposition needs a total colouring");
  if (!is_proper(g, f)) throw PreconditionError("decomposition needs a proper colouring");
  Atlas a;
  if (whitelist.empty()) {
    a.patterns = enumerate_dominant(f.q);
  } else {
    a.patterns = whitelist;
    for (const auto& p : a.patterns)
      if (!p.dominant() || p.q != f.q) throw PreconditionError("whitelist pattern " + p.to_string() + " is not dominant");
    std::sort(a.patterns.begin(), a.patterns.end());
  }
  a.regions.assign(a.patterns.size(), VertexSet(g.num_vertices()));
  parallel_for(a.patterns.size(), [&](std::size_t i) { a.regions[i] = plus(g, ordered_core(g, f, a.patterns[i])); });
  derive_sets(g, a);
  return a;
}

namespace {

// Vertices reachable from the face layer while avoiding `blocked`.
VertexSet reach_from_faces(const LatticeGraph& g, const VertexSet& blocked) {
  VertexSet start = g.face_layer() - blocked;
  VertexSet open = blocked.complement();
  VertexSet seen = start;
  std::vector<VertexId> stack = start.ids();
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : g.slots(x))
      if (y != kNoVertex && open.contains(y) && !seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
  }
  return seen;
}

void require_faces(const LatticeGraph& g) {
  if (g.fully_periodic())
    throw PreconditionError("a fully periodic ambient has no exterior to stand in for infinity");
}

}  // namespace

VertexSet seen_from(const LatticeGraph& g, const Atlas& atlas, const VertexSet& v, int radius) {
  require_faces(g);
  if (radius < 0) throw PreconditionError("radius must be non-negative");
  VertexSet w = expand(g, atlas.star, radius);
  VertexSet face = g.face_layer();
  VertexSet out(g.num_vertices());
  for (const auto& k : connected_components(g, w)) {
    bool keep = k.intersects(face) || k.intersects(v);
    if (!keep && !v.empty()) keep = !v.is_subset_of(reach_from_faces(g, k));
    if (keep) out |= k;
  }
  return out;
}

Atlas construct_breakup(const LatticeGraph& g, const Coloring& f, const VertexSet& v, const VertexSet& domain,
                        const Pattern& p0, int radius) {
  require_faces(g);
  if (!p0.dominant() || p0.pattern_class() != 0) throw PreconditionError("reference pattern must be dominant with |A| <= |B|");
  if (p0.q != f.q) throw PreconditionError("reference pattern disagrees with the colouring on q");
  if (!in_pattern(g, f, domain_interior(g, domain).complement(), p0))
    throw PreconditionError("colouring is not in the reference pattern outside the interior of the domain");

  Atlas y = decompose(g, f);
  VertexSet b = seen_from(g, y, v, radius);
  Atlas x;
  x.patterns = y.patterns;
  for (const auto& r : y.regions) x.regions.push_back(r & b);

  const int p0_index = x.index_of(p0);
  for (const auto& hole : connected_components(g, b.complement())) {
    int chosen = -1;
    bool consistent = true;
    external_boundary(g, hole).for_each([&](VertexId a) {
      if (y.star.contains(a)) {
        consistent = false;
        return;
      }
      for (std::size_t i = 0; i < y.regions.size(); ++i) {
        if (!y.regions[i].contains(a)) continue;
        if (chosen >= 0 && chosen != static_cast<int>(i)) consistent = false;
        chosen = static_cast<int>(i);
      }
    });
    if (!consistent) throw InvariantViolation("hole " + std::to_string(hole.first()) + " has no unique surrounding pattern");
    bool exterior = !hole.is_subset_of(domain);
    if (chosen < 0) chosen = p0_index;
    if (exterior && chosen != p0_index)
      throw InvariantViolation("hole touching the exterior is not surrounded by the reference pattern");
    x.regions[chosen] |= hole;
  }
  derive_sets(g, x);
  if (!(x.star == (y.star & b))) throw InvariantViolation("breakup star differs from the restricted region star");
  if (!(expand(g, x.star, radius) == b)) throw InvariantViolation("breakup star neighbourhood differs from the seen set");
  return x;
}

bool regular_p_even(const LatticeGraph& g, const VertexSet& region, const Pattern& p, VertexId* witness) {
  VertexSet p_even = p.even_parity() == 0 ? g.even_vertices() : g.odd_vertices();
  VertexSet p_odd = p_even.complement();
  VertexSet a = plus(g, region & p_odd);
  VertexSet rest = region.complement();
  VertexSet b = plus(g, rest & p_even);
  if (a == region && b == rest) return true;
  if (witness) {
    VertexSet diff = (a - region) | (region - a) | (b - rest) | (rest - b);
    *witness = diff.first();
  }
  return false;
}

BreakupReport verify_breakup(const LatticeGraph& g, const Atlas& x, const Coloring& f, const VertexSet& domain,
                             const Pattern& p0, int radius, const VertexSet* v) {
  BreakupReport rep;
  auto fail = [&](std::string clause, VertexId a, VertexId b, const Pattern* p) {
    rep.ok = false;
    ++rep.violation_count;
    if (rep.violations.size() < 32) rep.violations.push_back({std::move(clause), a, b, p ? p->to_string() : ""});
  };
  Atlas d = x;
  derive_sets(g, d);
  VertexSet near = expand(g, d.star, radius);

  for (std::size_t i = 0; i < d.patterns.size(); ++i) {
    const Pattern& p = d.patterns[i];
    const VertexSet& r = d.regions[i];
    VertexId w = kNoVertex;
    if (!regular_p_even(g, r, p, &w)) fail("regular P-even region", w, kNoVertex, &p);

    const ColorSet bdry = p.boundary_side(), inner = p.interior_side();
    near.for_each([&](VertexId u) {
      bool p_odd = g.parity(u) != p.even_parity();
      if (p_odd) {
        bool all = (neighbor_colors(g, f, u) & ~bdry) == 0;
        if (r.contains(u) != all) fail("membership iff neighbourhood in pattern", u, kNoVertex, &p);
        if (r.contains(u) && !d.overlap.contains(u) && !has_color(inner, f[u]))
          fail("odd vertex colour in interior side", u, kNoVertex, &p);
      } else if (r.contains(u) && !has_color(bdry, f[u])) {
        fail("even vertex colour in boundary side", u, kNoVertex, &p);
      }
    });
    d.bad.for_each([&](VertexId u) {
      if (g.parity(u) != p.even_parity() && (neighbor_colors(g, f, u) & ~bdry) == 0)
        fail("bad vertex neighbourhood escapes pattern", u, kNoVertex, &p);
    });
    for (const auto& e : out_edges(g, r)) {
      if (!has_color(bdry, f[e.from])) fail("out-edge tail colour", e.from, e.to, &p);
      if ((neighbor_colors(g, f, e.to) & ~bdry) == 0) fail("out-edge head neighbourhood", e.from, e.to, &p);
    }
  }
  int p0_index = d.index_of(p0);
  VertexSet outside = domain.complement();
  if (p0_index < 0) {
    if (!outside.empty()) fail("exterior inside reference region", outside.first(), kNoVertex, &p0);
  } else if (!outside.is_subset_of(d.regions[p0_index])) {
    fail("exterior inside reference region", (outside - d.regions[p0_index]).first(), kNoVertex, &p0);
  }
  if (v && !v->empty()) {
    VertexSet seen = seen_from(g, d, *v, radius);
    if (!(seen == near)) fail("seen from V", (near - seen).first(), kNoVertex, nullptr);
  }
  return rep;
}

AtlasClass classify_atlas(const LatticeGraph& g, const Atlas& x) {
  Atlas d = x;
  derive_sets(g, d);
  std::vector<Edge> edges;
  for (const auto& r : d.regions) {
    auto e = edge_boundary(g, r);
    edges.insert(edges.end(), e.begin(), e.end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  AtlasClass c;
  c.l = static_cast<long long>(edges.size());
  c.m = static_cast<long long>(d.overlap.size());
  c.n = static_cast<long long>(d.bad.size());
  c.nontrivial = !d.star.empty();
  c.l_lower_bound = c.l >= static_cast<long long>(g.dimension()) * g.dimension();
  return c;
}

BpComponents bp_components(const LatticeGraph& g, const Coloring& f, const VertexSet& v, const Pattern& p) {
  if (!p.dominant()) throw PreconditionError("pattern must be dominant");
  BpComponents out;
  out.z_bar = plus(g, ordered_core(g, f, p)) & pattern_vertices(g, f, p);
  out.b = VertexSet(g.num_vertices());
  for (const auto& comp : connected_components(g, out.z_bar.complement(), 2))
    if (comp.intersects(v)) out.b |= comp;
  out.diam_star = diam_star(g, out.b);
  return out;
}

}  // namespace chroma
