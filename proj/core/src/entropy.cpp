#include "chroma/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chroma/errors.hpp"
#include "chroma/parallel.hpp"

namespace chroma {

namespace {

constexpr double kTol = 1e-10;

double plogp_sum(const std::map<Outcome, double>& p) {
  double h = 0;
  for (const auto& [o, x] : p)
    if (x > 0) h -= x * std::log(x);
  return h;
}

Outcome project(const Outcome& o, const std::vector<int>& coords) {
  Outcome out;
  out.reserve(coords.size());
  for (int c : coords) out.push_back(o[c]);
  return out;
}

void check_coords(const FiniteDistribution& d, const std::vector<int>& coords) {
  const int n = static_cast<int>(d.arity());
  for (int c : coords)
    if (c < 0 || c >= n) throw PreconditionError("coordinate " + std::to_string(c) + " out of range");
}

}  // namespace

FiniteDistribution FiniteDistribution::from_probabilities(std::map<Outcome, double> p) {
  FiniteDistribution d;
  d.prob = std::move(p);
  d.validate();
  return d;
}

FiniteDistribution FiniteDistribution::from_rationals(const std::map<Outcome, Rational>& p) {
  Rational total = 0;
  FiniteDistribution d;
  for (const auto& [o, x] : p) {
    if (x < 0) throw PreconditionError("negative probability");
    total += x;
    d.prob[o] = static_cast<double>(x);
  }
  if (total != 1) throw PreconditionError("probabilities sum to " + to_string(total));
  d.exact = true;
  d.validate();
  return d;
}

FiniteDistribution FiniteDistribution::from_counts(const std::map<Outcome, long long>& counts) {
  long long total = 0;
  for (const auto& [o, c] : counts) {
    if (c < 0) throw PreconditionError("negative count");
    total += c;
  }
  if (total == 0) throw PreconditionError("empty sample");
  FiniteDistribution d;
  for (const auto& [o, c] : counts)
    if (c > 0) d.prob[o] = static_cast<double>(c) / static_cast<double>(total);
  d.validate();
  return d;
}

FiniteDistribution FiniteDistribution::uniform(const std::vector<Outcome>& outcomes) {
  std::map<Outcome, long long> counts;
  for (const auto& o : outcomes) counts[o] = 1;
  return from_counts(counts);
}

std::size_t FiniteDistribution::arity() const { return prob.empty() ? 0 : prob.begin()->first.size(); }

void FiniteDistribution::validate() const {
  if (prob.empty()) throw PreconditionError("empty distribution");
  const std::size_t n = arity();
  double total = 0;
  for (const auto& [o, x] : prob) {
    if (o.size() != n) throw PreconditionError("outcomes of mixed arity");
    if (!(x >= 0)) throw PreconditionError("negative probability");
    total += x;
  }
  if (std::abs(total - 1) > 1e-12) throw PreconditionError("probabilities do not sum to 1");
}

FiniteDistribution marginal(const FiniteDistribution& d, const std::vector<int>& coords) {
  check_coords(d, coords);
  FiniteDistribution out;
  out.exact = d.exact;
  for (const auto& [o, x] : d.prob) out.prob[project(o, coords)] += x;
  return out;
}

double shannon_entropy(const FiniteDistribution& d) { return plogp_sum(d.prob); }

double shannon_entropy(const FiniteDistribution& d, const std::vector<int>& coords) {
  return shannon_entropy(marginal(d, coords));
}

double conditional_entropy(const FiniteDistribution& d, const std::vector<int>& target,
                           const std::vector<int>& given) {
  check_coords(d, target);
  check_coords(d, given);
  std::map<Outcome, std::map<Outcome, double>> slices;
  for (const auto& [o, x] : d.prob) slices[project(o, given)][project(o, target)] += x;
  double h = 0;
  for (const auto& [y, slice] : slices) {
    double py = 0;
    for (const auto& [z, x] : slice) py += x;
    if (py <= 0) continue;
    double hy = 0;
    for (const auto& [z, x] : slice)
      if (x > 0) hy -= (x / py) * std::log(x / py);
    h += py * hy;
  }
  return h;
}

ShearerResult shearer_check(const FiniteDistribution& d, const std::vector<std::vector<int>>& cover, int k) {
  if (k < 1) throw PreconditionError("cover multiplicity must be positive");
  const int n = static_cast<int>(d.arity());
  std::vector<int> hits(n, 0);
  for (const auto& part : cover) {
    check_coords(d, part);
    std::set<int> distinct(part.begin(), part.end());
    for (int c : distinct) ++hits[c];
  }
  for (int i = 0; i < n; ++i)
    if (hits[i] < k)
      throw PreconditionError("index " + std::to_string(i) + " covered " + std::to_string(hits[i]) +
                              " times, need " + std::to_string(k));
  ShearerResult r;
  r.lhs = shannon_entropy(d);
  for (const auto& part : cover) r.rhs += shannon_entropy(d, part);
  r.rhs /= k;
  r.holds = r.lhs <= r.rhs + kTol;
  return r;
}

NeighborhoodType type_of(const std::vector<Color>& psi, int d, int q) {
  std::vector<int> mult(q + 1, 0);
  NeighborhoodType t;
  for (Color c : psi) {
    if (c < 1 || c > q) throw PreconditionError("colour out of range in neighbourhood");
    ++mult[c];
    t.colors |= color_bit(c);
  }
  for (int c = 1; c <= q; ++c)
    if (mult[c] > 0 && static_cast<long long>(mult[c]) * q <= d) t.unbalanced = true;
  return t;
}

NeighborhoodType neighborhood_type(const LatticeGraph& g, const Coloring& f, VertexId v, int q) {
  std::vector<Color> psi;
  for (VertexId u : g.slots(v)) {
    if (u == kNoVertex) throw PreconditionError("vertex " + std::to_string(v) + " lacks full degree");
    psi.push_back(f[u]);
  }
  return type_of(psi, g.dimension(), q);
}

namespace {

// Unions of g(v) and of g(u) per slot over the g ∈ Ω sharing a neighbour colour set at v.
struct SliceUnion {
  ColorSet at_v = 0;
  std::vector<ColorSet> at_slot;
};

std::map<ColorSet, SliceUnion> slices_at(const LatticeGraph& g, const std::vector<Coloring>& omega, VertexId v) {
  std::map<ColorSet, SliceUnion> out;
  const auto slots = g.slots(v);
  for (const auto& h : omega) {
    auto& s = out[neighbor_colors(g, h, v)];
    if (s.at_slot.empty()) s.at_slot.assign(slots.size(), 0);
    s.at_v |= color_bit(h[v]);
    for (std::size_t i = 0; i < slots.size(); ++i) s.at_slot[i] |= color_bit(h[slots[i]]);
  }
  return out;
}

bool dominant_size(int k, int q) { return k == q / 2 || k == (q + 1) / 2; }

void check_interior(const LatticeGraph& g, const VertexSet& s) {
  s.for_each([&](VertexId v) {
    if (g.on_face(v)) throw PreconditionError("vertex " + std::to_string(v) + " of S lacks full degree");
  });
}

struct VertexVerdict {
  bool unbal = false;
  bool nondom = false;
  std::vector<int> restricted_slots;
  bool uniq = false;
};

VertexVerdict judge(const LatticeGraph& g, const Coloring& f, const std::map<ColorSet, SliceUnion>& slices,
                    VertexId v, int q) {
  VertexVerdict out;
  const ColorSet full = all_colors(q);
  const ColorSet key = neighbor_colors(g, f, v);
  out.nondom = !dominant_size(color_count(key), q);
  out.unbal = neighborhood_type(g, f, v, q).unbalanced;
  const auto& mine = slices.at(key);
  for (std::size_t i = 0; i < mine.at_slot.size(); ++i)
    if ((mine.at_slot[i] | mine.at_v) != full) out.restricted_slots.push_back(static_cast<int>(i));
  int unexempt = 0;
  for (const auto& [k, sl] : slices) {
    if (!dominant_size(color_count(k), q)) continue;
    bool all_restricted = true;
    for (ColorSet u : sl.at_slot)
      if ((u | sl.at_v) == full) all_restricted = false;
    if (!all_restricted) ++unexempt;
  }
  out.uniq = unexempt <= 1;
  return out;
}

}  // namespace

ClassificationReport classify(const LatticeGraph& g, const Coloring& f, const std::vector<Coloring>& omega,
                              const VertexSet& s) {
  if (std::find(omega.begin(), omega.end(), f) == omega.end()) throw PreconditionError("f is not in omega");
  check_interior(g, s);
  const int q = f.q;
  const auto ids = s.ids();
  std::vector<VertexVerdict> verdicts(ids.size());
  parallel_for(ids.size(), [&](std::size_t i) { verdicts[i] = judge(g, f, slices_at(g, omega, ids[i]), ids[i], q); });
  ClassificationReport r{VertexSet(g.num_vertices()), VertexSet(g.num_vertices()), {}, VertexSet(g.num_vertices()), 0};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const VertexId v = ids[i];
    if (verdicts[i].unbal) r.unbal.insert(v);
    if (verdicts[i].nondom) r.nondom.insert(v);
    if (verdicts[i].uniq) r.uniq.insert(v);
    for (int slot : verdicts[i].restricted_slots) r.restricted.push_back({v, g.neighbor(v, slot), slot});
  }
  r.k_value = Rational(static_cast<long long>(r.unbal.size())) + Rational(static_cast<long long>(r.nondom.size()), q) +
              Rational(static_cast<long long>(r.restricted.size()), g.dimension());
  return r;
}

Rational k_min(const LatticeGraph& g, const std::vector<Coloring>& omega, const VertexSet& s) {
  if (omega.empty()) throw PreconditionError("omega is empty");
  Rational best = -1;
  for (const auto& f : omega) {
    Rational k = classify(g, f, omega, s).k_value;
    if (best < 0 || k < best) best = k;
  }
  return best;
}

namespace {

struct ZInputs {
  BigInt count;  // |Ψ|
  int k = 0;
  ColorSet j = 0;
  bool z = false;
  ColorSet i = 0;
};

void evaluate_cases(const ZInputs& in, int d, int q, ZBoundResult& r) {
  const int fl = q / 2, cl = (q + 1) / 2;
  r.base = boost::multiprecision::pow(BigInt(fl * cl), 2 * d);
  r.lhs = in.count * boost::multiprecision::pow(BigInt(color_count(in.i)), 2 * d);
  r.semi_restricted = in.k;
  r.type = {in.j, in.z};
  const double log_base = 2.0 * d * std::log(static_cast<double>(fl * cl));
  const double base = std::exp(log_base);
  auto add = [&](const std::string& name, bool applicable, double exponent) {
    ZBoundCase c{name, applicable, base * std::exp(-exponent), true};
    if (applicable && r.lhs > 0) {
      const double log_lhs = std::log(r.lhs.convert_to<double>());
      c.holds = log_lhs <= log_base - exponent + 1e-12;
    }
    r.holds = r.holds && c.holds;
    r.cases.push_back(c);
  };
  r.holds = true;
  r.cases.clear();
  add("semi-restricted", true, static_cast<double>(in.k) / q);
  add("non-dominant", !dominant_size(color_count(in.j), q), 4.0 * d / (static_cast<double>(q) * q));
  add("unbalanced-or-uncovered", (in.i | in.j) != all_colors(q) || in.z, static_cast<double>(d) / (4.0 * q));
}

}  // namespace

ZBoundResult z_bound_check(const std::vector<std::vector<Color>>& psi_set, ColorSet i_set, int d, int q) {
  validate_q(q);
  if (d < 1) throw PreconditionError("dimension must be positive");
  if (psi_set.empty()) throw PreconditionError("empty function family");
  std::set<std::vector<Color>> distinct(psi_set.begin(), psi_set.end());
  const NeighborhoodType t = type_of(*distinct.begin(), d, q);
  std::vector<ColorSet> seen(2 * d, 0);
  for (const auto& psi : distinct) {
    if (static_cast<int>(psi.size()) != 2 * d) throw PreconditionError("function length must be 2d");
    if (type_of(psi, d, q) != t) throw PreconditionError("functions of mixed type");
    for (int j = 0; j < 2 * d; ++j) seen[j] |= color_bit(psi[j]);
  }
  if ((i_set & ~all_colors(q)) != 0 || (i_set & t.colors) != 0)
    throw PreconditionError("I must be a subset of the complement of J");
  ZInputs in{BigInt(distinct.size()), 0, t.colors, t.unbalanced, i_set};
  for (ColorSet s : seen)
    if (s != t.colors) ++in.k;
  ZBoundResult r;
  evaluate_cases(in, d, q, r);
  return r;
}

ZBoundSweep z_bound_exhaustive(int d, int q) {
  validate_q(q);
  const int len = 2 * d;
  ZBoundSweep out;
  for (ColorSet j = 1; j <= all_colors(q); ++j) {
    const auto jc = colors_of(j);
    const int m = static_cast<int>(jc.size());
    // All functions [2d] -> J with image exactly J, with their type flag.
    std::vector<std::vector<Color>> funcs;
    std::vector<bool> unbal;
    std::vector<Color> psi(len, 0);
    std::vector<int> idx(len, 0);
    for (;;) {
      for (int p = 0; p < len; ++p) psi[p] = static_cast<Color>(jc[idx[p]]);
      const NeighborhoodType t = type_of(psi, d, q);
      if (t.colors == j) {
        funcs.push_back(psi);
        unbal.push_back(t.unbalanced);
      }
      int p = len;
      while (p > 0 && ++idx[p - 1] == m) idx[--p] = 0;
      if (p == 0) break;
    }
    // Product families: R_j ranges over non-empty subsets of J, encoded as masks over colours.
    std::vector<ColorSet> subsets;
    for (ColorSet r = 1; r <= j; ++r)
      if ((r & ~j) == 0) subsets.push_back(r);
    std::vector<int> pick(len, 0);
    const ColorSet comp = all_colors(q) & ~j;
    for (;;) {
      for (int z = 0; z < 2; ++z) {
        long long count = 0;
        std::vector<ColorSet> seen(len, 0);
        for (std::size_t f = 0; f < funcs.size(); ++f) {
          if (unbal[f] != (z == 1)) continue;
          bool inside = true;
          for (int p = 0; p < len && inside; ++p) inside = has_color(subsets[pick[p]], funcs[f][p]);
          if (!inside) continue;
          ++count;
          for (int p = 0; p < len; ++p) seen[p] |= color_bit(funcs[f][p]);
        }
        if (count == 0) continue;
        ++out.families;
        ZInputs in{BigInt(count), 0, j, z == 1, 0};
        for (ColorSet s : seen)
          if (s != j) ++in.k;
        // Every I ⊆ J^c, including the empty set.
        for (ColorSet i = comp;; i = (i - 1) & comp) {
          in.i = i;
          ZBoundResult r;
          evaluate_cases(in, d, q, r);
          ++out.checks;
          if (!r.holds) {
            if (out.failures == 0)
              out.first_failure = "J={" + color_list(j) + "} z=" + std::to_string(z) + " I={" + color_list(i) +
                                  "} |Psi|=" + std::to_string(count) + " k=" + std::to_string(in.k);
            ++out.failures;
          }
          if (i == 0) break;
        }
      }
      int p = len;
      while (p > 0 && ++pick[p - 1] == static_cast<int>(subsets.size())) pick[--p] = 0;
      if (p == 0) break;
    }
  }
  return out;
}

EntropyLossReport entropy_loss_eval(const LatticeGraph& g, const VertexSet& s, const std::vector<Coloring>& samples,
                                    const std::vector<double>& weights) {
  if (samples.empty()) throw PreconditionError("no samples");
  if (!weights.empty() && weights.size() != samples.size())
    throw PreconditionError("weights and samples differ in length");
  double total = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    if (w < 0) throw PreconditionError("negative weight");
    total += w;
    if (!is_total_on(samples[i], s)) throw PreconditionError("sample is not coloured on S");
  }
  if (total <= 0) throw PreconditionError("weights sum to zero");
  const int q = samples.front().q;
  const int deg = g.slot_count();
  auto weight = [&](std::size_t i) { return (weights.empty() ? 1.0 : weights[i]) / total; };
  // F(x): colour on S, 0 off S, -1 outside the ambient.
  auto value = [&](const Coloring& f, VertexId x) -> int {
    if (x == kNoVertex) return -1;
    return s.contains(x) ? f[x] : 0;
  };

  EntropyLossReport r;
  {
    const auto ids = s.ids();
    std::map<Outcome, double> law;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      Outcome o;
      for (VertexId v : ids) o.push_back(samples[i][v]);
      law[o] += weight(i);
    }
    r.direct = plogp_sum(law);
  }
  r.bound_applicable = true;
  s.for_each([&](VertexId v) {
    if (static_cast<int>(g.neighbors(v).size()) != deg) r.bound_applicable = false;
  });

  const double cap_i = q * std::log(2.0) / deg;
  const double cap_ii = std::log(static_cast<double>((q / 2) * ((q + 1) / 2)));
  const auto region = plus(g, s).ids();
  r.terms.resize(region.size());
  parallel_for(region.size(), [&](std::size_t t) {
    const VertexId v = region[t];
    EntropyTerm& term = r.terms[t];
    term.vertex = v;
    term.in_s = s.contains(v);
    term.full_degree = static_cast<int>(g.neighbors(v).size()) == deg;
    // Coordinates: 0 = neighbour value set, 1 = F(v), 2.. = F on the slots.
    std::map<Outcome, double> law;
    std::map<std::set<int>, int> set_label;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      Outcome o(2 + deg);
      std::set<int> vals;
      for (int k = 0; k < deg; ++k) {
        o[2 + k] = value(samples[i], g.neighbor(v, k));
        vals.insert(o[2 + k]);
      }
      o[0] = set_label.emplace(vals, static_cast<int>(set_label.size())).first->second;
      o[1] = value(samples[i], v);
      law[o] += weight(i);
    }
    FiniteDistribution d;
    d.prob = std::move(law);
    std::vector<int> nbrs;
    for (int k = 0; k < deg; ++k) nbrs.push_back(2 + k);
    term.term_i = shannon_entropy(d, {0}) / deg;
    term.term_ii = conditional_entropy(d, nbrs, {0}) / deg + conditional_entropy(d, {1}, {0});
    term.caps_hold = term.term_i <= cap_i + kTol && term.term_ii <= cap_ii + kTol;
  });
  for (const auto& t : r.terms) {
    if (!t.full_degree) r.flagged.push_back(t.vertex);
    if (t.in_s && !t.caps_hold)
      throw InvariantViolation("entropy term cap exceeded at vertex " + std::to_string(t.vertex));
    r.bound += 0.5 * (t.term_i + t.term_ii);
  }
  r.gap = r.bound - r.direct;
  r.holds = r.direct <= r.bound + kTol;
  if (r.bound_applicable && !r.holds)
    throw InvariantViolation("entropy of F exceeds the local bound by " + std::to_string(-r.gap));
  return r;
}

std::vector<VertexSet> u_p_sets(const LatticeGraph& g, const Atlas& atlas, const Coloring& f) {
  std::vector<VertexSet> out;
  for (const auto& p : atlas.patterns) {
    VertexSet u(g.num_vertices());
    atlas.bad.for_each([&](VertexId v) {
      if (is_p_even(g, v, p) && neighbor_colors(g, f, v) == p.interior_side()) u.insert(v);
    });
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace chroma
