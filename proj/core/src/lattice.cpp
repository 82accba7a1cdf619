#include "chroma/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long long parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw PreconditionError(std::string("cannot parse ") + what + " from '" + s + "'");
  }
}

}  // namespace

VertexSet VertexSet::full(std::size_t ambient) {
  VertexSet s(ambient);
  s.bits_.set();
  return s;
}

VertexSet VertexSet::from_ids(std::size_t ambient, std::span<const VertexId> ids) {
  VertexSet s(ambient);
  for (VertexId v : ids) {
    if (v >= ambient) throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

std::vector<VertexId> VertexSet::ids() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

VertexId VertexSet::first() const {
  auto i = bits_.find_first();
  return i == Bits::npos ? kNoVertex : static_cast<VertexId>(i);
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  s.bits_.flip();
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
bool VertexSet::intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  bits_ |= o.bits_;
  return *this;
}
VertexSet& VertexSet::operator&=(const VertexSet& o) {
  bits_ &= o.bits_;
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
  bits_ -= o.bits_;
  return *this;
}

std::string VertexSet::to_string() const {
  std::string out;
  for_each([&](VertexId v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

VertexSet VertexSet::parse(std::size_t ambient, const std::string& text) {
  VertexSet s(ambient);
  if (text.empty()) return s;
  for (const auto& tok : split(text, ',')) {
    long long v = parse_int(tok, "vertex id");
    if (v < 0 || static_cast<std::size_t>(v) >= ambient)
      throw PreconditionError("vertex id " + tok + " out of range");
    s.insert(static_cast<VertexId>(v));
  }
  return s;
}

LatticeGraph::LatticeGraph(std::vector<int> dims, std::vector<bool> periodic)
    : dims_(std::move(dims)), periodic_(std::move(periodic)) {
  if (dims_.empty()) throw PreconditionError("graph needs at least one axis");
  if (periodic_.empty()) periodic_.assign(dims_.size(), false);
  if (periodic_.size() != dims_.size())
    throw PreconditionError("dims and periodic flags differ in length");
  std::size_t n = 1;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    if (dims_[a] < 1) throw PreconditionError("axis length must be positive");
    if (periodic_[a] && (dims_[a] < 2 || dims_[a] % 2 != 0))
      throw PreconditionError("periodic axis " + std::to_string(a) + " needs even length >= 2, got " +
                              std::to_string(dims_[a]));
    n *= static_cast<std::size_t>(dims_[a]);
    if (n >= kNoVertex) throw PreconditionError("graph too large");
  }
  n_ = n;
  const int d = dimension();
  stride_.assign(d, 1);
  for (int a = d - 2; a >= 0; --a) stride_[a] = stride_[a + 1] * dims_[a + 1];

  slots_.assign(n_ * 2 * d, kNoVertex);
  parity_.assign(n_, 0);
  std::vector<int> c(d, 0);
  for (std::size_t v = 0; v < n_; ++v) {
    int sum = 0;
    for (int a = 0; a < d; ++a) sum += c[a];
    parity_[v] = static_cast<std::uint8_t>(sum & 1);
    for (int a = 0; a < d; ++a) {
      for (int dir = 0; dir < 2; ++dir) {
        int x = c[a] + (dir ? 1 : -1);
        if (x < 0 || x >= dims_[a]) {
          if (!periodic_[a]) continue;
          x = (x + dims_[a]) % dims_[a];
        }
        long long delta = static_cast<long long>(x - c[a]) * static_cast<long long>(stride_[a]);
        slots_[v * 2 * d + 2 * a + dir] = static_cast<VertexId>(static_cast<long long>(v) + delta);
      }
    }
    for (int a = d - 1; a >= 0; --a) {
      if (++c[a] < dims_[a]) break;
      c[a] = 0;
    }
  }
}

bool LatticeGraph::fully_periodic() const {
  return std::all_of(periodic_.begin(), periodic_.end(), [](bool p) { return p; });
}
bool LatticeGraph::any_periodic() const {
  return std::any_of(periodic_.begin(), periodic_.end(), [](bool p) { return p; });
}

std::vector<int> LatticeGraph::coords(VertexId v) const {
  std::vector<int> c(dims_.size());
  for (int a = 0; a < dimension(); ++a) c[a] = coord(v, a);
  return c;
}

int LatticeGraph::coord(VertexId v, int axis) const {
  return static_cast<int>((v / stride_[axis]) % static_cast<std::size_t>(dims_[axis]));
}

VertexId LatticeGraph::id(std::span<const int> c) const {
  if (c.size() != dims_.size()) throw PreconditionError("coordinate arity mismatch");
  std::size_t v = 0;
  for (int a = 0; a < dimension(); ++a) {
    if (c[a] < 0 || c[a] >= dims_[a]) throw PreconditionError("coordinate out of range");
    v += static_cast<std::size_t>(c[a]) * stride_[a];
  }
  return static_cast<VertexId>(v);
}

std::vector<VertexId> LatticeGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (VertexId w : slots(v))
    if (w != kNoVertex) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int LatticeGraph::degree(VertexId v) const {
  int k = 0;
  for (VertexId w : slots(v)) k += (w != kNoVertex);
  return k;
}

VertexId LatticeGraph::shift(VertexId v, int axis, int step) const {
  int x = coord(v, axis) + step;
  if (x < 0 || x >= dims_[axis]) {
    if (!periodic_[axis]) return kNoVertex;
    x = ((x % dims_[axis]) + dims_[axis]) % dims_[axis];
  }
  long long delta = static_cast<long long>(x - coord(v, axis)) * static_cast<long long>(stride_[axis]);
  return static_cast<VertexId>(static_cast<long long>(v) + delta);
}

VertexSet LatticeGraph::even_vertices() const {
  VertexSet s(n_);
  for (VertexId v = 0; v < n_; ++v)
    if (parity_[v] == 0) s.insert(v);
  return s;
}

VertexSet LatticeGraph::odd_vertices() const { return even_vertices().complement(); }

VertexSet LatticeGraph::face_layer() const {
  VertexSet s(n_);
  for (VertexId v = 0; v < n_; ++v)
    if (on_face(v)) s.insert(v);
  return s;
}

std::string LatticeGraph::spec_string() const {
  std::string out = "dims=";
  for (std::size_t a = 0; a < dims_.size(); ++a) out += (a ? "," : "") + std::to_string(dims_[a]);
  out += ";periodic=";
  for (std::size_t a = 0; a < dims_.size(); ++a) out += std::string(a ? "," : "") + (periodic_[a] ? "1" : "0");
  return out;
}

LatticeGraph LatticeGraph::parse_spec(const std::string& text) {
  std::vector<int> dims;
  std::vector<bool> per;
  for (const auto& field : split(text, ';')) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw PreconditionError("malformed graph spec '" + text + "'");
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "dims") {
      for (const auto& t : split(val, ',')) dims.push_back(static_cast<int>(parse_int(t, "axis length")));
    } else if (key == "periodic") {
      for (const auto& t : split(val, ',')) {
        if (t != "0" && t != "1") throw PreconditionError("periodic flags must be 0 or 1");
        per.push_back(t == "1");
      }
    }
  }
  if (per.empty()) per.assign(dims.size(), false);
  return LatticeGraph(dims, per);
}

VertexSet neighborhood(const LatticeGraph& g, const VertexSet& u) {
  VertexSet out(g.num_vertices());
  u.for_each([&](VertexId v) {
    for (VertexId w : g.slots(v))
      if (w != kNoVertex) out.insert(w);
  });
  return out;
}

VertexSet plus(const LatticeGraph& g, const VertexSet& u) { return u | neighborhood(g, u); }

VertexSet expand(const LatticeGraph& g, const VertexSet& u, int radius) {
  if (radius < 0) throw PreconditionError("radius must be non-negative");
  VertexSet cur = u;
  VertexSet frontier = u;
  for (int r = 0; r < radius && !frontier.empty(); ++r) {
    VertexSet next = neighborhood(g, frontier) - cur;
    cur |= next;
    frontier = std::move(next);
  }
  return cur;
}

VertexSet internal_boundary(const LatticeGraph& g, const VertexSet& u) {
  return u & neighborhood(g, u.complement());
}

VertexSet external_boundary(const LatticeGraph& g, const VertexSet& u) { return neighborhood(g, u) - u; }

VertexBoundaries vertex_boundaries(const LatticeGraph& g, const VertexSet& u) {
  VertexBoundaries b{internal_boundary(g, u), external_boundary(g, u), {}};
  b.both = b.internal | b.external;
  return b;
}

VertexSet n_t(const LatticeGraph& g, const VertexSet& u, int t) {
  if (t < 1) throw PreconditionError("threshold t must be at least 1");
  std::vector<int> hits(g.num_vertices(), 0);
  u.for_each([&](VertexId v) {
    for (VertexId w : g.slots(v))
      if (w != kNoVertex) ++hits[w];
  });
  VertexSet out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (hits[v] >= t) out.insert(v);
  return out;
}

NtExpansion n_t_and_expand(const LatticeGraph& g, const VertexSet& u, int t, int r) {
  return {n_t(g, u, t), expand(g, u, r)};
}

VertexId edge_head(const LatticeGraph& g, const Edge& e) { return g.neighbor(e.tail, 2 * e.axis + 1); }

namespace {

void collect_edges(const LatticeGraph& g, const VertexSet& u, const VertexSet& w, std::vector<Edge>& out) {
  u.for_each([&](VertexId v) {
    for (int s = 0; s < g.slot_count(); ++s) {
      VertexId x = g.neighbor(v, s);
      if (x == kNoVertex || !w.contains(x)) continue;
      out.push_back((s & 1) ? Edge{v, s / 2} : Edge{x, s / 2});
    }
  });
}

void sort_unique(std::vector<Edge>& e) {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
}

}  // namespace

std::vector<Edge> edges_between(const LatticeGraph& g, const VertexSet& u, const VertexSet& w) {
  std::vector<Edge> out;
  collect_edges(g, u, w, out);
  sort_unique(out);
  return out;
}

std::vector<Edge> edge_boundary(const LatticeGraph& g, const VertexSet& u) {
  return edges_between(g, u, u.complement());
}

std::vector<DirectedEdge> out_edges(const LatticeGraph& g, const VertexSet& u) {
  std::vector<DirectedEdge> out;
  u.for_each([&](VertexId v) {
    for (int s = 0; s < g.slot_count(); ++s) {
      VertexId x = g.neighbor(v, s);
      if (x != kNoVertex && !u.contains(x)) out.push_back({v, x, s});
    }
  });
  return out;
}

std::vector<DirectedEdge> in_edges(const LatticeGraph& g, const VertexSet& u) {
  return out_edges(g, u.complement());
}

int boundary_edges_at(const LatticeGraph& g, const VertexSet& u, VertexId v) {
  bool in = u.contains(v);
  int k = 0;
  for (VertexId x : g.slots(v))
    if (x != kNoVertex && u.contains(x) != in) ++k;
  return k;
}

EdgeBoundaryReport edge_boundaries(const LatticeGraph& g, const VertexSet& u, const VertexSet& w) {
  EdgeBoundaryReport r;
  r.between = edges_between(g, u, w);
  r.out_edges = out_edges(g, u);
  VertexSet even = g.even_vertices();
  VertexSet outside = u.complement();
  r.even_part = edges_between(g, u & even, outside);
  r.odd_part = edges_between(g, u - even, outside);
  long long ne = static_cast<long long>((u & even).size());
  long long no = static_cast<long long>(u.size()) - ne;
  r.imbalance = ne - no;
  r.identity_applicable = true;
  u.for_each([&](VertexId v) {
    if (g.on_face(v)) r.identity_applicable = false;
  });
  long long lhs = 2LL * g.dimension() * r.imbalance;
  long long rhs = static_cast<long long>(r.even_part.size()) - static_cast<long long>(r.odd_part.size());
  r.identity_holds = lhs == rhs;
  return r;
}

std::vector<VertexSet> connected_components(const LatticeGraph& g, const VertexSet& u, int power) {
  if (power < 1) throw PreconditionError("component power must be at least 1");
  const std::size_t n = g.num_vertices();
  std::vector<int> label(n, -1);
  std::vector<VertexSet> comps;
  std::vector<int> stamp(n, -1);
  std::vector<int> dist(n, 0);
  int stamp_id = 0;
  u.for_each([&](VertexId root) {
    if (label[root] >= 0) return;
    int c = static_cast<int>(comps.size());
    comps.emplace_back(n);
    std::deque<VertexId> queue{root};
    label[root] = c;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      comps[c].insert(x);
      if (power == 1) {
        for (VertexId y : g.slots(x))
          if (y != kNoVertex && u.contains(y) && label[y] < 0) {
            label[y] = c;
            queue.push_back(y);
          }
        continue;
      }
      // bounded search in the ambient graph
      ++stamp_id;
      std::deque<VertexId> local{x};
      stamp[x] = stamp_id;
      dist[x] = 0;
      while (!local.empty()) {
        VertexId a = local.front();
        local.pop_front();
        if (u.contains(a) && label[a] < 0) {
          label[a] = c;
          queue.push_back(a);
        }
        if (dist[a] == power) continue;
        for (VertexId b : g.slots(a))
          if (b != kNoVertex && stamp[b] != stamp_id) {
            stamp[b] = stamp_id;
            dist[b] = dist[a] + 1;
            local.push_back(b);
          }
      }
    }
  });
  return comps;
}

bool is_connected(const LatticeGraph& g, const VertexSet& u, int power) {
  return connected_components(g, u, power).size() <= 1;
}

bool is_co_connected(const LatticeGraph& g, const VertexSet& u) { return is_connected(g, u.complement()); }

VertexSet co_connected_closure(const LatticeGraph& g, const VertexSet& u, VertexId v) {
  if (u.contains(v)) return g.all();
  VertexSet outside = u.complement();
  for (auto& c : connected_components(g, outside))
    if (c.contains(v)) return c.complement();
  throw InvariantViolation("closure: vertex not found in complement components");
}

std::vector<int> bfs_distances(const LatticeGraph& g, const VertexSet& sources) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<VertexId> queue;
  sources.for_each([&](VertexId v) {
    dist[v] = 0;
    queue.push_back(v);
  });
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.slots(x))
      if (y != kNoVertex && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

int graph_distance(const LatticeGraph& g, VertexId a, VertexId b) {
  VertexSet s(g.num_vertices());
  s.insert(a);
  return bfs_distances(g, s)[b];
}

int diameter(const LatticeGraph& g, const VertexSet& u) {
  int best = 0;
  VertexSet single(g.num_vertices());
  u.for_each([&](VertexId v) {
    single.insert(v);
    auto dist = bfs_distances(g, single);
    single.erase(v);
    u.for_each([&](VertexId w) { best = std::max(best, dist[w]); });
  });
  return best;
}

long long diam_star(const LatticeGraph& g, const VertexSet& u) {
  auto comps = connected_components(g, u, 2);
  long long total = 2LL * static_cast<long long>(comps.size());
  for (const auto& c : comps) total += diameter(g, c);
  return total;
}

}  // namespace chroma
