#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace chroma {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Subset of the vertices of a fixed ambient graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t ambient) : bits_(ambient) {}

  static VertexSet full(std::size_t ambient);
  static VertexSet from_ids(std::size_t ambient, std::span<const VertexId> ids);

  std::size_t ambient_size() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(VertexId v) const { return v < bits_.size() && bits_.test(v); }
  void insert(VertexId v) { bits_.set(v); }
  void erase(VertexId v) { bits_.reset(v); }

  std::vector<VertexId> ids() const;
  VertexId first() const;

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
      f(static_cast<VertexId>(i));
  }

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

  // Ascending comma separated ids, e.g. "0,4,7".
  std::string to_string() const;
  static VertexSet parse(std::size_t ambient, const std::string& text);

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

// Unordered edge {tail, tail + e_axis}.
struct Edge {
  VertexId tail;
  int axis;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed edge; slot disambiguates parallel edges on period-2 axes.
struct DirectedEdge {
  VertexId from;
  VertexId to;
  int slot;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Box or torus Z^{d1} x T^{d2} with row-major vertex ids (axis 0 slowest).
// Every vertex has 2d neighbour slots; slot 2a is -e_a, slot 2a+1 is +e_a.
// Slots leaving a non-periodic box hold kNoVertex. A periodic axis of length
// 2 gives two parallel edges between the same pair of vertices.
class LatticeGraph {
 public:
  LatticeGraph() = default;
  LatticeGraph(std::vector<int> dims, std::vector<bool> periodic);

  int dimension() const { return static_cast<int>(dims_.size()); }
  std::size_t num_vertices() const { return n_; }
  const std::vector<int>& dims() const { return dims_; }
  bool periodic(int axis) const { return periodic_[axis]; }
  bool fully_periodic() const;
  bool any_periodic() const;

  std::vector<int> coords(VertexId v) const;
  VertexId id(std::span<const int> coords) const;
  int coord(VertexId v, int axis) const;

  int parity(VertexId v) const { return parity_[v]; }
  bool is_even(VertexId v) const { return parity_[v] == 0; }

  int slot_count() const { return 2 * dimension(); }
  VertexId neighbor(VertexId v, int slot) const { return slots_[v * slot_count() + slot]; }
  std::span<const VertexId> slots(VertexId v) const {
    return {slots_.data() + v * slot_count(), static_cast<std::size_t>(slot_count())};
  }
  // Distinct neighbours, ascending.
  std::vector<VertexId> neighbors(VertexId v) const;
  int degree(VertexId v) const;
  // Vertex with a slot leaving the box, i.e. adjacent to the exterior.
  bool on_face(VertexId v) const { return degree(v) < slot_count(); }
  int max_degree() const { return slot_count(); }

  // Translate by step along axis; kNoVertex when leaving a non-periodic box.
  VertexId shift(VertexId v, int axis, int step) const;

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet even_vertices() const;
  VertexSet odd_vertices() const;
  VertexSet face_layer() const;

  // "dims=a,b,c;periodic=0,1,0"
  std::string spec_string() const;
  static LatticeGraph parse_spec(const std::string& text);

  friend bool operator==(const LatticeGraph& a, const LatticeGraph& b) {
    return a.dims_ == b.dims_ && a.periodic_ == b.periodic_;
  }

 private:
  std::vector<int> dims_;
  std::vector<bool> periodic_;
  std::vector<std::size_t> stride_;
  std::size_t n_ = 0;
  std::vector<VertexId> slots_;
  std::vector<std::uint8_t> parity_;
};

inline LatticeGraph build_graph(std::vector<int> dims, std::vector<bool> periodic) {
  return LatticeGraph(std::move(dims), std::move(periodic));
}

// Vertex boundaries. internal = U ∩ N(U^c), external = N(U) \ U.
struct VertexBoundaries {
  VertexSet internal;
  VertexSet external;
  VertexSet both;
};

VertexSet neighborhood(const LatticeGraph& g, const VertexSet& u);
VertexSet plus(const LatticeGraph& g, const VertexSet& u);
VertexSet expand(const LatticeGraph& g, const VertexSet& u, int radius);
VertexSet internal_boundary(const LatticeGraph& g, const VertexSet& u);
VertexSet external_boundary(const LatticeGraph& g, const VertexSet& u);
VertexBoundaries vertex_boundaries(const LatticeGraph& g, const VertexSet& u);

// Vertices with at least t neighbours in U (edge multiplicity counted).
VertexSet n_t(const LatticeGraph& g, const VertexSet& u, int t);

struct NtExpansion {
  VertexSet n_t;
  VertexSet expanded;
};
NtExpansion n_t_and_expand(const LatticeGraph& g, const VertexSet& u, int t, int r);

struct EdgeBoundaryReport {
  std::vector<Edge> between;             // edges between U and W
  std::vector<DirectedEdge> out_edges;   // u in U, v not in U
  std::vector<Edge> even_part;           // edges from even vertices of U leaving U
  std::vector<Edge> odd_part;            // edges from odd vertices of U leaving U
  long long imbalance = 0;               // |U even| - |U odd|
  // The identity 2d(|U even| - |U odd|) = |even part| - |odd part| holds when
  // every vertex of U has full degree; identity_applicable records that.
  bool identity_applicable = false;
  bool identity_holds = false;
};
EdgeBoundaryReport edge_boundaries(const LatticeGraph& g, const VertexSet& u, const VertexSet& w);

std::vector<Edge> edges_between(const LatticeGraph& g, const VertexSet& u, const VertexSet& w);
std::vector<Edge> edge_boundary(const LatticeGraph& g, const VertexSet& u);
std::vector<DirectedEdge> out_edges(const LatticeGraph& g, const VertexSet& u);
std::vector<DirectedEdge> in_edges(const LatticeGraph& g, const VertexSet& u);
// Edges of the boundary of U incident to v.
int boundary_edges_at(const LatticeGraph& g, const VertexSet& u, VertexId v);
VertexId edge_head(const LatticeGraph& g, const Edge& e);

// Components under G^{⊗power} (adjacent when graph distance <= power),
// ordered by minimum vertex id.
std::vector<VertexSet> connected_components(const LatticeGraph& g, const VertexSet& u, int power = 1);
bool is_connected(const LatticeGraph& g, const VertexSet& u, int power = 1);
bool is_co_connected(const LatticeGraph& g, const VertexSet& u);

// Complement of the component of U^c containing v; everything if v ∈ U.
VertexSet co_connected_closure(const LatticeGraph& g, const VertexSet& u, VertexId v);

std::vector<int> bfs_distances(const LatticeGraph& g, const VertexSet& sources);
int graph_distance(const LatticeGraph& g, VertexId a, VertexId b);
// Largest pairwise graph distance in G between vertices of U (0 if |U| <= 1).
int diameter(const LatticeGraph& g, const VertexSet& u);
// 2m + Σ diam(U_i) over the m ⊗2-components of U.
long long diam_star(const LatticeGraph& g, const VertexSet& u);

}  // namespace chroma
