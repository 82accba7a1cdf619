#include "chroma/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "chroma/errors.hpp"
#include "chroma/rng.hpp"

namespace chroma {

bool is_total(const Coloring& f) {
  return std::none_of(f.values.begin(), f.values.end(), [](Color c) { return c == kHole; });
}

bool is_total_on(const Coloring& f, const VertexSet& u) {
  bool ok = true;
  u.for_each([&](VertexId v) { ok = ok && f[v] != kHole; });
  return ok;
}

bool is_proper(const LatticeGraph& g, const Coloring& f) {
  if (f.size() != g.num_vertices()) throw PreconditionError("coloring size does not match graph");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (f[v] == kHole) continue;
    for (int s = 1; s < g.slot_count(); s += 2) {
      VertexId w = g.neighbor(v, s);
      if (w != kNoVertex && f[w] == f[v]) return false;
    }
  }
  return true;
}

bool vertex_in_pattern(const LatticeGraph& g, const Coloring& f, VertexId v, const Pattern& p) {
  return f[v] != kHole && has_color(p.side_for_parity(g.parity(v)), f[v]);
}

bool in_pattern(const LatticeGraph& g, const Coloring& f, const VertexSet& u, const Pattern& p) {
  bool ok = true;
  u.for_each([&](VertexId v) { ok = ok && vertex_in_pattern(g, f, v, p); });
  return ok;
}

VertexSet pattern_vertices(const LatticeGraph& g, const Coloring& f, const Pattern& p) {
  VertexSet out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (vertex_in_pattern(g, f, v, p)) out.insert(v);
  return out;
}

ColorSet neighbor_colors(const LatticeGraph& g, const Coloring& f, VertexId v) {
  ColorSet s = 0;
  for (VertexId w : g.slots(v))
    if (w != kNoVertex && f[w] != kHole) s |= color_bit(f[w]);
  return s;
}

VertexSet domain_boundary(const LatticeGraph& g, const VertexSet& domain) {
  VertexSet out = internal_boundary(g, domain);
  domain.for_each([&](VertexId v) {
    if (g.on_face(v)) out.insert(v);
  });
  return out;
}

VertexSet domain_interior(const LatticeGraph& g, const VertexSet& domain) {
  return domain - domain_boundary(g, domain);
}

void validate_boundary_condition(const LatticeGraph& g, const BoundaryCondition& bc) {
  if (bc.domain.ambient_size() != g.num_vertices()) throw PreconditionError("domain does not match graph");
  if (bc.domain.empty()) throw PreconditionError("domain is empty");
  if (!bc.pattern.dominant()) throw PreconditionError("boundary pattern " + bc.pattern.to_string() + " is not dominant");
  if (bc.pattern.pattern_class() != 0)
    throw PreconditionError("boundary pattern must have |A| <= |B|, got " + bc.pattern.to_string());
  if (!is_connected(g, bc.domain)) throw PreconditionError("domain is not connected");
  if (!is_co_connected(g, bc.domain)) throw PreconditionError("domain is not co-connected");
}

Coloring pure_pattern_sample(const LatticeGraph& g, const VertexSet& u, const Pattern& p, std::uint64_t seed) {
  validate_q(p.q);
  if (p.a & p.b) throw PreconditionError("pattern sides must be disjoint");
  Coloring f(p.q, g.num_vertices());
  Rng rng(seed);
  std::vector<int> sides[2] = {colors_of(p.a), colors_of(p.b)};
  u.for_each([&](VertexId v) {
    const auto& side = sides[g.parity(v)];
    if (side.empty())
      throw PreconditionError(std::string("pattern side ") + (g.parity(v) ? "B" : "A") +
                              " is empty but the set has vertices of that parity");
    f[v] = static_cast<Color>(side[rng.below(side.size())]);
  });
  return f;
}

bool check_boundary(const LatticeGraph& g, const Coloring& f, const BoundaryCondition& bc) {
  return in_pattern(g, f, domain_boundary(g, bc.domain), bc.pattern);
}

Coloring extend_outside(const LatticeGraph& g, const Coloring& f, const BoundaryCondition& bc, std::uint64_t seed) {
  Coloring out = pure_pattern_sample(g, bc.domain.complement(), bc.pattern, seed);
  bc.domain.for_each([&](VertexId v) { out[v] = f[v]; });
  if (!is_proper(g, out)) throw InvariantViolation("extend_outside produced an improper coloring");
  return out;
}

std::string write_coloring(const LatticeGraph& g, const Coloring& f) {
  if (f.size() != g.num_vertices()) throw PreconditionError("coloring size does not match graph");
  std::string out = "q=" + std::to_string(f.q) + ";" + g.spec_string() + "\n";
  for (std::size_t v = 0; v < f.size(); ++v) out += (v ? " " : "") + std::to_string(f.values[v]);
  out += "\n";
  return out;
}

std::pair<LatticeGraph, Coloring> read_coloring(const std::string& text) {
  std::istringstream in(text);
  std::string header, body;
  if (!std::getline(in, header)) throw PreconditionError("coloring file is empty");
  std::getline(in, body);
  if (header.rfind("q=", 0) != 0) throw PreconditionError("coloring header must start with q=");
  auto semi = header.find(';');
  if (semi == std::string::npos) throw PreconditionError("coloring header lacks graph spec");
  int q = 0;
  try {
    q = std::stoi(header.substr(2, semi - 2));
  } catch (const std::exception&) {
    throw PreconditionError("malformed q in coloring header");
  }
  validate_q(q);
  LatticeGraph g = LatticeGraph::parse_spec(header.substr(semi + 1));
  Coloring f(q, g.num_vertices());
  std::istringstream vals(body);
  std::size_t i = 0;
  long long c;
  while (vals >> c) {
    if (i >= f.size()) throw PreconditionError("coloring has more values than vertices");
    if (c < 0 || c > q) throw PreconditionError("colour " + std::to_string(c) + " outside 0.." + std::to_string(q));
    f.values[i++] = static_cast<Color>(c);
  }
  if (!vals.eof()) throw PreconditionError("malformed colour value in coloring file");
  if (i != f.size()) throw PreconditionError("coloring has fewer values than vertices");
  return {g, f};
}

std::pair<LatticeGraph, Coloring> load_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open coloring file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_coloring(ss.str());
}

void save_coloring_file(const std::string& path, const LatticeGraph& g, const Coloring& f) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << write_coloring(g, f);
}

std::vector<Color> canonical_relabel(const Pattern& p, const Pattern& p0) {
  std::vector<Color> map(p.q + 1, kHole);
  auto bind = [&](ColorSet from, ColorSet to) {
    auto x = colors_of(from), y = colors_of(to);
    if (x.size() != y.size())
      throw PreconditionError("pattern " + p.to_string() + " cannot be relabelled onto " + p0.to_string());
    for (std::size_t i = 0; i < x.size(); ++i) map[x[i]] = static_cast<Color>(y[i]);
  };
  bind(p.boundary_side(), p0.a);
  bind(p.interior_side(), p0.b);
  ColorSet rest_from = all_colors(p.q) & ~(p.a | p.b);
  ColorSet rest_to = all_colors(p.q) & ~(p0.a | p0.b);
  bind(rest_from, rest_to);
  return map;
}

RepairLayout repair_layout(const LatticeGraph& g, const RepairInstance& inst) {
  const std::size_t n = g.num_vertices();
  if (inst.s.ambient_size() != n) throw PreconditionError("S does not match graph");
  if (inst.shift_axis < 0 || inst.shift_axis >= g.dimension()) throw PreconditionError("shift axis out of range");
  if (inst.shift_direction != 1 && inst.shift_direction != -1) throw PreconditionError("shift direction must be +1 or -1");
  if (!inst.p0.dominant() || inst.p0.pattern_class() != 0)
    throw PreconditionError("reference pattern must be dominant with |A| <= |B|");

  RepairLayout L;
  L.part_of.assign(n, -1);
  VertexSet covered = inst.s;
  for (std::size_t i = 0; i < inst.parts.size(); ++i) {
    const auto& part = inst.parts[i];
    if (part.region.ambient_size() != n) throw PreconditionError("part does not match graph");
    if (!part.pattern.dominant()) throw PreconditionError("part pattern " + part.pattern.to_string() + " is not dominant");
    if (part.pattern.q != inst.p0.q) throw PreconditionError("part pattern has a different q");
    if (covered.intersects(part.region)) throw PreconditionError("parts must partition the complement of S");
    covered |= part.region;
    part.region.for_each([&](VertexId v) { L.part_of[v] = static_cast<int>(i); });
    if (!internal_boundary(g, part.region).is_subset_of(external_boundary(g, inst.s)))
      throw PreconditionError("internal boundary of part " + part.pattern.to_string() +
                              " is not contained in the outer boundary of S");
  }
  if (covered.size() != n) throw PreconditionError("parts must cover the complement of S");

  L.s_plus = plus(g, inst.s);
  L.kept0 = VertexSet(n);
  L.kept1 = VertexSet(n);
  L.kept1_shifted = VertexSet(n);
  for (const auto& part : inst.parts) {
    VertexSet kept = part.region - L.s_plus;
    if (part.pattern.pattern_class() == 0) {
      L.kept0 |= kept;
    } else {
      L.kept1 |= kept;
      kept.for_each([&](VertexId v) {
        VertexId w = g.shift(v, inst.shift_axis, inst.shift_direction);
        if (w == kNoVertex)
          throw PreconditionError("shift overflow: vertex " + std::to_string(v) + " of part " +
                                  part.pattern.to_string() + " would leave the ambient box");
        L.kept1_shifted.insert(w);
      });
    }
  }
  if (L.kept0.intersects(L.kept1_shifted)) throw PreconditionError("shifted class-1 regions collide with class-0 regions");
  L.filled = (L.kept0 | L.kept1_shifted).complement();
  return L;
}

void validate_repair(const LatticeGraph& g, const RepairInstance& inst, const Coloring& f) {
  for (const auto& part : inst.parts) {
    VertexSet hyp = plus(g, internal_boundary(g, part.region));
    if (!in_pattern(g, f, hyp, part.pattern))
      throw PreconditionError("coloring is not in the " + part.pattern.to_string() +
                              " pattern on the closed boundary of its part");
  }
}

Coloring repair_transform(const LatticeGraph& g, const RepairInstance& inst, const Coloring& f, const Coloring& h) {
  RepairLayout L = repair_layout(g, inst);
  if (f.size() != g.num_vertices() || h.size() != g.num_vertices()) throw PreconditionError("coloring size mismatch");
  validate_repair(g, inst, f);
  if (!in_pattern(g, h, L.filled, inst.p0)) throw PreconditionError("filling is not in the reference pattern");

  std::vector<std::vector<Color>> maps;
  for (const auto& part : inst.parts) maps.push_back(canonical_relabel(part.pattern, inst.p0));

  Coloring out(f.q, g.num_vertices());
  L.filled.for_each([&](VertexId v) { out[v] = h[v]; });
  L.kept0.for_each([&](VertexId v) {
    if (f[v] == kHole) throw PreconditionError("coloring has a hole on a kept region");
    out[v] = maps[L.part_of[v]][f[v]];
  });
  L.kept1.for_each([&](VertexId v) {
    if (f[v] == kHole) throw PreconditionError("coloring has a hole on a kept region");
    out[g.shift(v, inst.shift_axis, inst.shift_direction)] = maps[L.part_of[v]][f[v]];
  });
  if (!is_total(out)) throw InvariantViolation("repair output is not total");
  if (!is_proper(g, out)) throw InvariantViolation("repair output is not proper");
  return out;
}

RepairPreimage repair_inverse(const LatticeGraph& g, const RepairInstance& inst, const Coloring& image) {
  RepairLayout L = repair_layout(g, inst);
  std::vector<std::vector<Color>> inverse;
  for (const auto& part : inst.parts) {
    auto m = canonical_relabel(part.pattern, inst.p0);
    std::vector<Color> inv(m.size(), kHole);
    for (std::size_t c = 1; c < m.size(); ++c) inv[m[c]] = static_cast<Color>(c);
    inverse.push_back(std::move(inv));
  }
  RepairPreimage pre{Coloring(image.q, g.num_vertices()), Coloring(image.q, g.num_vertices())};
  L.kept0.for_each([&](VertexId v) { pre.outside[v] = inverse[L.part_of[v]][image[v]]; });
  L.kept1.for_each([&](VertexId v) {
    pre.outside[v] = inverse[L.part_of[v]][image[g.shift(v, inst.shift_axis, inst.shift_direction)]];
  });
  L.filled.for_each([&](VertexId v) { pre.filling[v] = image[v]; });
  return pre;
}

std::string filling_count(const LatticeGraph& g, const RepairLayout& layout, const Pattern& p0) {
  using boost::multiprecision::cpp_int;
  cpp_int total = 1;
  layout.filled.for_each([&](VertexId v) { total *= color_count(p0.side_for_parity(g.parity(v))); });
  return total.str();
}

std::vector<Coloring> enumerate_fillings(const LatticeGraph& g, const RepairLayout& layout, const Pattern& p0,
                                         std::size_t limit) {
  auto ids = layout.filled.ids();
  std::vector<std::vector<int>> choices;
  for (VertexId v : ids) choices.push_back(colors_of(p0.side_for_parity(g.parity(v))));
  std::vector<Coloring> out;
  std::vector<std::size_t> idx(ids.size(), 0);
  while (true) {
    if (out.size() >= limit) throw ResourceError("filling enumeration exceeds limit " + std::to_string(limit));
    Coloring h(p0.q, g.num_vertices());
    for (std::size_t i = 0; i < ids.size(); ++i) h[ids[i]] = static_cast<Color>(choices[i][idx[i]]);
    out.push_back(std::move(h));
    std::size_t k = ids.size();
    while (k > 0 && ++idx[k - 1] == choices[k - 1].size()) idx[--k] = 0;
    if (k == 0) return out;
  }
}

}  // namespace chroma
