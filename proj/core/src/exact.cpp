#include "chroma/exact.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "chroma/errors.hpp"

namespace chroma {

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw PreconditionError("malformed rational '" + text + "'");
  }
}

namespace {

double log_of(const BigInt& x) {
  if (x == 0) return -INFINITY;
  // split large integers so the conversion to double stays finite
  BigInt y = x;
  double shift = 0;
  while (y > BigInt(1) << 1000) {
    y >>= 500;
    shift += 500 * std::log(2.0);
  }
  return std::log(y.convert_to<double>()) + shift;
}

void check_constraint(const LatticeGraph& g, const ColoringConstraint& c) {
  validate_q(c.q);
  if (c.domain.ambient_size() != g.num_vertices() || c.allowed.size() != g.num_vertices())
    throw PreconditionError("constraint does not match graph");
}

CountResult make_result(BigInt count, std::size_t sites, std::string method) {
  CountResult r{std::move(count), 0, std::move(method)};
  r.log_count_per_site = sites ? log_of(r.count) / static_cast<double>(sites) : 0;
  return r;
}

}  // namespace

ColoringConstraint free_constraint(const LatticeGraph& g, const VertexSet& domain, int q) {
  validate_q(q);
  if (domain.ambient_size() != g.num_vertices()) throw PreconditionError("domain does not match graph");
  ColoringConstraint c{q, domain, std::vector<ColorSet>(g.num_vertices(), 0), "free"};
  domain.for_each([&](VertexId v) { c.allowed[v] = all_colors(q); });
  return c;
}

ColoringConstraint pattern_boundary_constraint(const LatticeGraph& g, const VertexSet& domain, const Pattern& p) {
  ColoringConstraint c = free_constraint(g, domain, p.q);
  restrict_constraint(g, c, domain_boundary(g, domain), p);
  c.kind = "pattern-boundary";
  return c;
}

void restrict_constraint(const LatticeGraph& g, ColoringConstraint& c, const VertexSet& where, const Pattern& p) {
  if (p.q != c.q) throw PreconditionError("pattern and constraint disagree on q");
  where.for_each([&](VertexId v) {
    if (c.domain.contains(v)) c.allowed[v] &= p.side_for_parity(g.parity(v));
  });
}

ColoringConstraint pinned_constraint(const LatticeGraph& g, const VertexSet& domain, const Coloring& pins) {
  ColoringConstraint c = free_constraint(g, domain, pins.q);
  c.kind = "pinned";
  if (pins.size() != g.num_vertices()) throw PreconditionError("pin coloring does not match graph");
  if (!is_proper(g, pins)) throw PreconditionError("pinned cells are not proper among themselves");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (pins[v] == kHole) continue;
    if (pins[v] > pins.q) throw PreconditionError("pinned colour out of range");
    if (domain.contains(v)) {
      c.allowed[v] &= color_bit(pins[v]);
    } else {
      for (VertexId w : g.slots(v))
        if (w != kNoVertex && domain.contains(w)) c.allowed[w] &= ~color_bit(pins[v]);
    }
  }
  return c;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const { return boost::hash_range(k.begin(), k.end()); }
};

class Backtracker {
 public:
  Backtracker(const LatticeGraph& g, const ColoringConstraint& c, std::size_t cache_limit) : cache_limit_(cache_limit) {
    ids_ = c.domain.ids();
    std::vector<int> local(g.num_vertices(), -1);
    for (std::size_t i = 0; i < ids_.size(); ++i) local[ids_[i]] = static_cast<int>(i);
    adj_.resize(ids_.size());
    dom_.resize(ids_.size());
    assigned_.assign(ids_.size(), 0);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      dom_[i] = c.allowed[ids_[i]];
      for (VertexId w : g.neighbors(ids_[i]))
        if (local[w] >= 0) adj_[i].push_back(local[w]);
    }
    mark_.assign(ids_.size(), 0);
  }

  BigInt run() {
    std::vector<int> all(ids_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return count_set(all);
  }

 private:
  bool live(int u, int v) const { return !assigned_[u] && !assigned_[v] && (dom_[u] & dom_[v]); }

  BigInt count_set(const std::vector<int>& verts) {
    BigInt total = 1;
    epoch_ += 2;
    const std::uint64_t in = epoch_, seen = epoch_ + 1;
    for (int v : verts) mark_[v] = in;
    std::vector<std::vector<int>> comps;
    for (int root : verts) {
      if (mark_[root] != in) continue;
      std::vector<int> comp{root};
      mark_[root] = seen;
      for (std::size_t k = 0; k < comp.size(); ++k) {
        int x = comp[k];
        for (int y : adj_[x])
          if (mark_[y] == in && live(x, y)) {
            mark_[y] = seen;
            comp.push_back(y);
          }
      }
      comps.push_back(std::move(comp));
    }
    for (auto& comp : comps) {
      if (comp.size() == 1) {
        total *= color_count(dom_[comp[0]]);
      } else {
        std::sort(comp.begin(), comp.end());
        total *= count_component(comp);
      }
      if (total == 0) break;
    }
    return total;
  }

  BigInt count_component(const std::vector<int>& comp) {
    std::vector<std::uint64_t> key;
    key.reserve(2 * comp.size());
    int pivot = -1;
    for (int v : comp) {
      key.push_back(static_cast<std::uint64_t>(v));
      key.push_back(dom_[v]);
      if (pivot < 0 || color_count(dom_[v]) < color_count(dom_[pivot])) pivot = v;
    }
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    BigInt total = 0;
    if (dom_[pivot] != 0) {
      std::vector<int> rest;
      rest.reserve(comp.size() - 1);
      for (int v : comp)
        if (v != pivot) rest.push_back(v);
      ColorSet options = dom_[pivot];
      assigned_[pivot] = 1;
      std::vector<int> touched;
      for (int c : colors_of(options)) {
        ColorSet bit = color_bit(c);
        touched.clear();
        bool dead = false;
        for (int u : adj_[pivot]) {
          if (assigned_[u] || !(dom_[u] & bit)) continue;
          dom_[u] &= ~bit;
          touched.push_back(u);
          if (!dom_[u]) dead = true;
        }
        if (!dead) total += count_set(rest);
        for (int u : touched) dom_[u] |= bit;
      }
      assigned_[pivot] = 0;
    }
    if (cache_.size() >= cache_limit_) cache_.clear();
    cache_.emplace(std::move(key), total);
    return total;
  }

  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> adj_;
  std::vector<ColorSet> dom_;
  std::vector<char> assigned_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t epoch_ = 1;
  std::size_t cache_limit_;
  std::unordered_map<std::vector<std::uint64_t>, BigInt, KeyHash> cache_;
};

}  // namespace

CountResult count_colorings(const LatticeGraph& g, const ColoringConstraint& c, const CountOptions& opt) {
  check_constraint(g, c);
  Backtracker bt(g, c, opt.cache_limit);
  return make_result(bt.run(), c.domain.size(), "backtracking");
}

int transfer_axis(const LatticeGraph& g) {
  int best = -1;
  for (int a = 0; a < g.dimension(); ++a)
    if (!g.periodic(a) && (best < 0 || g.dims()[a] > g.dims()[best])) best = a;
  if (best >= 0) return best;
  best = 0;
  for (int a = 1; a < g.dimension(); ++a)
    if (g.dims()[a] > g.dims()[best]) best = a;
  return best;
}

namespace {

using State = std::vector<Color>;

struct Layering {
  int axis = 0;
  int length = 0;
  std::vector<std::vector<VertexId>> layers;   // position -> vertex, per layer
  std::vector<std::vector<int>> earlier;       // intra-layer neighbours at earlier positions
};

Layering make_layering(const LatticeGraph& g) {
  Layering L;
  L.axis = transfer_axis(g);
  L.length = g.dims()[L.axis];
  L.layers.resize(L.length);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.coord(v, L.axis) == 0) L.layers[0].push_back(v);
  for (int k = 1; k < L.length; ++k)
    for (VertexId v : L.layers[0]) L.layers[k].push_back(g.shift(v, L.axis, k));
  const auto& base = L.layers[0];
  std::vector<int> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < base.size(); ++i) pos[base[i]] = static_cast<int>(i);
  L.earlier.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    for (VertexId w : g.neighbors(base[i]))
      if (pos[w] >= 0 && pos[w] < static_cast<int>(i)) L.earlier[i].push_back(pos[w]);
  return L;
}

// Enumerate states of layer k compatible with prev (nullptr for none).
template <class F>
void for_each_state(const Layering& L, const ColoringConstraint& c, int k, const State* prev, F&& emit) {
  const auto& layer = L.layers[k];
  State cur(layer.size(), kHole);
  std::vector<ColorSet> options(layer.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == layer.size()) {
      emit(cur);
      return;
    }
    VertexId v = layer[i];
    if (!c.domain.contains(v)) {
      cur[i] = kHole;
      rec(i + 1);
      return;
    }
    ColorSet opts = c.allowed[v];
    if (prev && (*prev)[i] != kHole) opts &= ~color_bit((*prev)[i]);
    for (int j : L.earlier[i])
      if (cur[j] != kHole) opts &= ~color_bit(cur[j]);
    for (int col : colors_of(opts)) {
      cur[i] = static_cast<Color>(col);
      rec(i + 1);
    }
    cur[i] = kHole;
  };
  rec(0);
}

bool compatible(const State& a, const State& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != kHole && a[i] == b[i]) return false;
  return true;
}

BigInt run_layers(const Layering& L, const ColoringConstraint& c, std::map<State, BigInt> cur, std::uint64_t max_states,
                  const State* wrap) {
  for (int k = 1; k < L.length; ++k) {
    std::map<State, BigInt> next;
    for (const auto& [s, count] : cur) {
      for_each_state(L, c, k, &s, [&](const State& t) {
        next[t] += count;
        if (next.size() > max_states) throw ResourceError("transfer state budget exceeded");
      });
    }
    cur = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [s, count] : cur)
    if (!wrap || compatible(s, *wrap)) total += count;
  return total;
}

}  // namespace

CountResult transfer_count(const LatticeGraph& g, const ColoringConstraint& c, const TransferOptions& opt) {
  check_constraint(g, c);
  Layering L = make_layering(g);
  // worst-case layer state space
  long double space = 1;
  for (int k = 0; k < L.length; ++k) {
    long double s = 1;
    for (VertexId v : L.layers[k])
      if (c.domain.contains(v)) s *= std::max(1, color_count(c.allowed[v]));
    space = std::max(space, s);
  }
  if (space > static_cast<long double>(opt.max_states))
    throw ResourceError("transfer layer state space " + std::to_string(static_cast<double>(space)) +
                        " exceeds budget " + std::to_string(opt.max_states));

  BigInt total = 0;
  bool wrap = g.periodic(L.axis) && L.length > 1;
  if (!wrap) {
    std::map<State, BigInt> first;
    for_each_state(L, c, 0, nullptr, [&](const State& s) { first[s] += 1; });
    total = run_layers(L, c, std::move(first), opt.max_states, nullptr);
  } else {
    std::vector<State> starts;
    for_each_state(L, c, 0, nullptr, [&](const State& s) { starts.push_back(s); });
    for (const auto& s : starts) total += run_layers(L, c, {{s, BigInt(1)}}, opt.max_states, &s);
  }
  return make_result(total, c.domain.size(), "transfer");
}

void enumerate_colorings(const LatticeGraph& g, const ColoringConstraint& c,
                         const std::function<void(const Coloring&)>& visit, std::size_t limit) {
  check_constraint(g, c);
  auto ids = c.domain.ids();
  Coloring f(c.q, g.num_vertices());
  std::size_t emitted = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ids.size()) {
      if (++emitted > limit) throw ResourceError("colouring enumeration exceeds limit " + std::to_string(limit));
      visit(f);
      return;
    }
    VertexId v = ids[i];
    ColorSet opts = c.allowed[v] & ~neighbor_colors(g, f, v);
    for (int col : colors_of(opts)) {
      f[v] = static_cast<Color>(col);
      rec(i + 1);
    }
    f[v] = kHole;
  };
  rec(0);
}

ExactMarginal exact_marginal(const LatticeGraph& g, const ColoringConstraint& c, VertexId v) {
  check_constraint(g, c);
  if (!c.domain.contains(v)) throw PreconditionError("marginal vertex is outside the domain");
  std::vector<BigInt> counts(c.q);
  BigInt total = 0;
  for (int col = 1; col <= c.q; ++col) {
    if (!has_color(c.allowed[v], col)) continue;
    ColoringConstraint pinned = c;
    pinned.allowed[v] = color_bit(col);
    counts[col - 1] = count_colorings(g, pinned).count;
    total += counts[col - 1];
  }
  if (total == 0) throw PreconditionError("measure undefined: the constraint admits no colouring");
  ExactMarginal m{v, {}};
  for (const auto& k : counts) m.distribution.emplace_back(k, total);
  return m;
}

double tv_distance(const std::vector<double>& m1, const std::vector<double>& m2) {
  if (m1.size() != m2.size()) throw PreconditionError("distributions live on different universes");
  double s = 0;
  for (std::size_t i = 0; i < m1.size(); ++i) s += std::abs(m1[i] - m2[i]);
  return s / 2;
}

Rational tv_distance(const std::vector<Rational>& m1, const std::vector<Rational>& m2) {
  if (m1.size() != m2.size()) throw PreconditionError("distributions live on different universes");
  Rational s = 0;
  for (std::size_t i = 0; i < m1.size(); ++i) s += abs(m1[i] - m2[i]);
  return s / 2;
}

double tv_distance(const std::map<std::vector<Color>, double>& m1, const std::map<std::vector<Color>, double>& m2) {
  std::size_t width = m1.empty() ? (m2.empty() ? 0 : m2.begin()->first.size()) : m1.begin()->first.size();
  for (const auto* m : {&m1, &m2})
    for (const auto& [k, p] : *m)
      if (k.size() != width) throw PreconditionError("distributions live on different universes");
  double s = 0;
  auto a = m1.begin(), b = m2.begin();
  while (a != m1.end() || b != m2.end()) {
    if (b == m2.end() || (a != m1.end() && a->first < b->first)) {
      s += std::abs(a->second);
      ++a;
    } else if (a == m1.end() || b->first < a->first) {
      s += std::abs(b->second);
      ++b;
    } else {
      s += std::abs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return s / 2;
}

ToyRatio toy_ratio(const LatticeGraph& g, const VertexSet& domain, const VertexSet& u, const Pattern& p0,
                   const Pattern& p) {
  if (!p0.dominant() || !p.dominant()) throw PreconditionError("toy ratio needs dominant patterns");
  if (p0.q != p.q) throw PreconditionError("patterns disagree on q");
  if (p0.pattern_class() != 0) throw PreconditionError("reference pattern must have |A| <= |B|");
  if (p == p0) throw PreconditionError("droplet pattern must differ from the reference pattern");
  VertexSet u_plus = plus(g, u);
  if (!u_plus.is_subset_of(domain)) throw PreconditionError("U^+ must lie inside the domain");

  auto constrained = [&](const VertexSet& droplet) {
    ColoringConstraint c = free_constraint(g, domain, p.q);
    restrict_constraint(g, c, plus(g, droplet), p);
    restrict_constraint(g, c, plus(g, domain - droplet), p0);
    return count_colorings(g, c).count;
  };
  ToyRatio r;
  r.n_u = constrained(u);
  r.n_empty = constrained(g.empty_set());
  if (r.n_empty == 0) throw PreconditionError("no colouring in the reference pattern");
  r.ratio = Rational(r.n_u, r.n_empty);

  const int q = p.q;
  const int d = g.dimension();
  Rational base;
  if (q % 2 == 0) {
    base = Rational(q - 2, q);
    r.exponent_numerator = static_cast<long long>(vertex_boundaries(g, u).both.size());
    r.exponent_denominator = 1;
  } else {
    base = Rational(q - 1, q + 1);
    r.exponent_numerator = static_cast<long long>(edge_boundary(g, u).size());
    r.exponent_denominator = 2LL * d;
  }
  if (r.exponent_numerator % r.exponent_denominator == 0) {
    long long e = r.exponent_numerator / r.exponent_denominator;
    Rational b = 1;
    for (long long i = 0; i < e; ++i) b *= base;
    r.bound_exact = b;
    r.within_bound = r.ratio <= b;
    r.equality = r.ratio == b;
    r.bound = b.convert_to<double>();
  } else {
    r.bound = std::pow(base.convert_to<double>(),
                       static_cast<double>(r.exponent_numerator) / static_cast<double>(r.exponent_denominator));
    r.within_bound = r.ratio.convert_to<double>() <= r.bound * (1 + 1e-12);
    r.equality = false;
  }

  if (q % 2 == 0) {
    r.equality_predicted = color_count(p0.a ^ p.a) == 2;
  } else {
    VertexSet inner = internal_boundary(g, u);
    bool odd_set = inner.is_subset_of(g.odd_vertices());
    bool even_set = inner.is_subset_of(g.even_vertices());
    bool a_sub = (p0.a & ~p.a) == 0 && p0.a != p.a;
    bool b_sub = (p0.b & ~p.b) == 0 && p0.b != p.b;
    r.equality_predicted = (odd_set && a_sub) || (even_set && b_sub);
  }
  return r;
}

HtopReport htop_estimate(int q, const std::vector<LatticeGraph>& boxes) {
  validate_q(q);
  HtopReport rep;
  rep.lower_bound = 0.5 * std::log(static_cast<double>((q / 2) * (q - q / 2)));
  for (const auto& g : boxes) {
    ColoringConstraint c = free_constraint(g, g.all(), q);
    CountResult r;
    try {
      r = transfer_count(g, c);
    } catch (const ResourceError&) {
      r = count_colorings(g, c);
    }
    rep.entries.push_back({g.spec_string(), r.count, r.log_count_per_site});
  }
  return rep;
}

}  // namespace chroma
