#include "oracles.hpp"

#include <deque>
#include <functional>
#include <set>

namespace oracle {

namespace {

void enumerate(const LatticeGraph& g, const ColoringConstraint& c, const std::function<void(const Coloring&)>& visit) {
  const auto ids = c.domain.ids();
  std::vector<std::vector<int>> choice;
  for (VertexId v : ids) choice.push_back(colors_of(c.allowed[v]));
  for (const auto& ch : choice)
    if (ch.empty()) return;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v : ids)
    for (VertexId w : g.slots(v))
      if (w != kNoVertex && v < w && c.domain.contains(w)) edges.emplace_back(v, w);
  std::vector<std::size_t> idx(ids.size(), 0);
  Coloring f(c.q, g.num_vertices());
  while (true) {
    for (std::size_t i = 0; i < ids.size(); ++i) f[ids[i]] = static_cast<Color>(choice[i][idx[i]]);
    bool ok = true;
    for (auto [a, b] : edges)
      if (f[a] == f[b]) {
        ok = false;
        break;
      }
    if (ok) visit(f);
    std::size_t k = 0;
    while (k < ids.size() && ++idx[k] == choice[k].size()) idx[k++] = 0;
    if (k == ids.size()) return;
  }
}

}  // namespace

unsigned long long brute_count(const LatticeGraph& g, const ColoringConstraint& c) {
  unsigned long long n = 0;
  enumerate(g, c, [&](const Coloring&) { ++n; });
  return n;
}

std::vector<unsigned long long> brute_marginal(const LatticeGraph& g, const ColoringConstraint& c, VertexId v) {
  std::vector<unsigned long long> out(c.q, 0);
  enumerate(g, c, [&](const Coloring& f) { ++out[f[v] - 1]; });
  return out;
}

std::vector<Coloring> brute_colorings(const LatticeGraph& g, const ColoringConstraint& c) {
  std::vector<Coloring> out;
  enumerate(g, c, [&](const Coloring& f) { out.push_back(f); });
  return out;
}

bool regular_by_definition(const LatticeGraph& g, const VertexSet& u, SetParity parity) {
  const int boundary = parity == SetParity::Odd ? 1 : 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    bool same_side_neighbour = false, other_side_neighbour = false;
    for (VertexId w : g.neighbors(v)) (u.contains(w) == u.contains(v) ? same_side_neighbour : other_side_neighbour) = true;
    if (!same_side_neighbour) return false;
    if (other_side_neighbour) {
      // v is in the internal boundary if inside U, the external one otherwise.
      const int want = u.contains(v) ? boundary : 1 - boundary;
      if (g.parity(v) != want) return false;
    }
  }
  return true;
}

std::vector<VertexSet> flood_components(const LatticeGraph& g, const VertexSet& u) {
  std::vector<VertexSet> out;
  VertexSet seen(g.num_vertices());
  for (VertexId s : u.ids()) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.num_vertices());
    std::deque<VertexId> todo{s};
    seen.insert(s);
    while (!todo.empty()) {
      VertexId x = todo.front();
      todo.pop_front();
      comp.insert(x);
      for (VertexId y : g.neighbors(x))
        if (u.contains(y) && !seen.contains(y)) {
          seen.insert(y);
          todo.push_back(y);
        }
    }
    out.push_back(comp);
  }
  return out;
}

Classification classify_by_definition(const LatticeGraph& g, const Coloring& f, const std::vector<Coloring>& omega,
                                      const VertexSet& s) {
  const int q = f.q;
  const int d = g.dimension();
  Classification out{VertexSet(g.num_vertices()), VertexSet(g.num_vertices()), VertexSet(g.num_vertices()), {}};
  auto image = [&](const Coloring& h, VertexId v) {
    std::set<int> seen;
    for (VertexId w : g.slots(v)) seen.insert(h[w]);
    return seen;
  };
  auto dominant_size = [&](std::size_t k) { return 2 * k == static_cast<std::size_t>(q) || 2 * k == static_cast<std::size_t>(q) + 1 || 2 * k + 1 == static_cast<std::size_t>(q); };
  for (VertexId v : s.ids()) {
    const auto mine = image(f, v);
    if (!dominant_size(mine.size())) out.nondom.insert(v);
    for (int colour : mine) {
      int mult = 0;
      for (VertexId w : g.slots(v)) mult += f[w] == colour;
      if (mult * q <= d) out.unbal.insert(v);
    }
    // Restricted: colours seen at v or at slot u over g with the same neighbour image.
    auto restricted_slots = [&](const std::set<int>& key) {
      std::vector<bool> r(g.slot_count(), true);
      for (int slot = 0; slot < g.slot_count(); ++slot) {
        std::set<int> seen;
        for (const auto& h : omega)
          if (image(h, v) == key) {
            seen.insert(h[v]);
            seen.insert(h[g.neighbor(v, slot)]);
          }
        r[slot] = static_cast<int>(seen.size()) != q;
      }
      return r;
    };
    const auto mine_restricted = restricted_slots(mine);
    for (int slot = 0; slot < g.slot_count(); ++slot)
      if (mine_restricted[slot]) out.restricted.emplace_back(v, g.neighbor(v, slot));
    std::set<std::set<int>> keys;
    for (const auto& h : omega) keys.insert(image(h, v));
    int unexempt = 0;
    for (const auto& key : keys) {
      if (!dominant_size(key.size())) continue;
      auto r = restricted_slots(key);
      bool all = true;
      for (bool b : r) all = all && b;
      if (!all) ++unexempt;
    }
    if (unexempt <= 1) out.uniq.insert(v);
  }
  return out;
}

}  // namespace oracle
