#include "chroma_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chroma/approx.hpp"
#include "chroma/coloring.hpp"
#include "chroma/decomposition.hpp"
#include "chroma/errors.hpp"
#include "chroma/exact.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"
#include "chroma/sampler.hpp"
#include "chroma_cli/report.hpp"
#include "chroma_cli/suites.hpp"

namespace chroma::cli {
namespace {

bool has(const Json& cfg, const char* key) { return cfg.contains(key) && !cfg[key].is_null(); }

std::string str(const Json& cfg, const char* key) { return cfg.at(key).get<std::string>(); }

OrderedJson ids(const VertexSet& s) {
  OrderedJson a = OrderedJson::array();
  s.for_each([&](VertexId v) { a.push_back(v); });
  return a;
}

VertexSet parse_domain(const LatticeGraph& g, const std::string& text) {
  if (text == "all") return g.all();
  return VertexSet::parse(g.num_vertices(), text);
}

VertexId box_centre(const LatticeGraph& g) {
  std::vector<int> c;
  for (int len : g.dims()) c.push_back(len / 2);
  return g.id(c);
}

struct Instance {
  LatticeGraph g;
  int q = 0;
  VertexSet domain;
  ColoringConstraint constraint;
  OrderedJson description;
};

Instance build_instance(const Json& cfg) {
  Instance in;
  in.g = LatticeGraph::parse_spec(str(cfg, "graph"));
  in.q = cfg.at("q").get<int>();
  validate_q(in.q);
  in.domain = parse_domain(in.g, str(cfg, "domain"));
  const std::string kind = str(cfg, "constraint");
  if (kind == "free") {
    in.constraint = free_constraint(in.g, in.domain, in.q);
  } else if (kind == "pattern") {
    if (!has(cfg, "pattern")) throw PreconditionError("constraint 'pattern' needs field 'pattern'");
    in.constraint = pattern_boundary_constraint(in.g, in.domain, Pattern::parse(str(cfg, "pattern"), in.q));
  } else if (kind == "pinned") {
    if (!has(cfg, "pins")) throw PreconditionError("constraint 'pinned' needs field 'pins'");
    auto [pg, pins] = load_coloring_file(str(cfg, "pins"));
    if (!(pg == in.g)) throw PreconditionError("pin file graph differs from " + in.g.spec_string());
    if (pins.q != in.q) throw PreconditionError("pin file q differs from the configured q");
    in.constraint = pinned_constraint(in.g, in.domain, pins);
  } else {
    throw PreconditionError("unknown constraint '" + kind + "' (free | pattern | pinned)");
  }
  in.description = {{"graph", in.g.spec_string()},
                    {"q", in.q},
                    {"constraint", kind},
                    {"pattern", has(cfg, "pattern") ? OrderedJson(str(cfg, "pattern")) : OrderedJson(nullptr)},
                    {"domain_size", in.domain.size()}};
  return in;
}

int exact_count(const Json& cfg, std::ostream& out) {
  Instance in = build_instance(cfg);
  const std::string method = str(cfg, "method");
  CountResult r;
  if (method == "backtracking") {
    r = count_colorings(in.g, in.constraint);
  } else if (method == "transfer") {
    r = transfer_count(in.g, in.constraint);
  } else if (method == "both") {
    r = count_colorings(in.g, in.constraint);
    CountResult t = transfer_count(in.g, in.constraint);
    if (t.count != r.count)
      throw InvariantViolation("backtracking count " + r.count.str() + " differs from transfer count " + t.count.str());
    r.method = "both";
  } else {
    throw PreconditionError("unknown method '" + method + "' (backtracking | transfer | both)");
  }
  OrderedJson body;
  body["count"] = r.count.str();
  body["method"] = method;
  body["log_count_per_site"] = r.log_count_per_site;
  body["instance"] = in.description;
  emit_json(cfg, body, out);
  return 0;
}

int marginal(const Json& cfg, std::ostream& out) {
  Instance in = build_instance(cfg);
  const VertexId v = has(cfg, "vertex") ? cfg["vertex"].get<VertexId>() : box_centre(in.g);
  if (v >= in.g.num_vertices() || !in.domain.contains(v))
    throw PreconditionError("vertex " + std::to_string(v) + " is not in the domain");
  ExactMarginal m = exact_marginal(in.g, in.constraint, v);
  OrderedJson exact = OrderedJson::array(), approx = OrderedJson::array();
  for (const auto& p : m.distribution) {
    exact.push_back(to_string(p));
    approx.push_back(p.convert_to<double>());
  }
  OrderedJson body;
  body["vertex"] = v;
  body["coords"] = in.g.coords(v);
  body["distribution"] = exact;
  body["probabilities"] = approx;
  body["instance"] = in.description;
  emit_json(cfg, body, out);
  return 0;
}

int toy(const Json& cfg, std::ostream& out) {
  const LatticeGraph g = LatticeGraph::parse_spec(str(cfg, "graph"));
  const int q = cfg.at("q").get<int>();
  validate_q(q);
  const VertexSet domain = parse_domain(g, str(cfg, "domain"));
  const VertexSet u = VertexSet::parse(g.num_vertices(), str(cfg, "u"));
  const Pattern p0 = Pattern::parse(str(cfg, "p0"), q);
  const Pattern p = Pattern::parse(str(cfg, "p"), q);
  ToyRatio r = toy_ratio(g, domain, u, p0, p);
  OrderedJson body;
  body["n_u"] = r.n_u.str();
  body["n_empty"] = r.n_empty.str();
  body["ratio"] = to_string(r.ratio);
  body["ratio_value"] = r.ratio.convert_to<double>();
  body["bound"] = r.bound;
  body["bound_exact"] = r.bound_exact ? OrderedJson(to_string(*r.bound_exact)) : OrderedJson(nullptr);
  body["exponent"] = {{"numerator", r.exponent_numerator}, {"denominator", r.exponent_denominator}};
  body["within_bound"] = r.within_bound;
  body["equality"] = r.equality;
  body["equality_predicted"] = r.equality_predicted;
  body["instance"] = {{"graph", g.spec_string()}, {"q", q}, {"u", u.to_string()}, {"p0", p0.to_string()},
                      {"p", p.to_string()}};
  emit_json(cfg, body, out);
  return 0;
}

int sample(const Json& cfg, std::ostream& out) {
  ChainConfig c;
  c.graph = LatticeGraph::parse_spec(str(cfg, "graph"));
  const int q = cfg.at("q").get<int>();
  validate_q(q);
  c.domain = parse_domain(c.graph, str(cfg, "domain"));
  c.boundary = Pattern::parse(str(cfg, "boundary"), q);
  c.seed = cfg.at("seed").get<std::uint64_t>();
  c.sweeps = cfg.at("sweeps").get<long long>();
  c.burn_in = cfg.at("burn_in").get<long long>();
  c.thin = cfg.at("thin").get<long long>();
  c.algorithm = parse_algorithm(str(cfg, "algorithm"));
  c.random_scan = cfg.at("random_scan").get<bool>();
  c.chains = cfg.at("chains").get<int>();
  OrderStats stats = run_experiment(c);
  const std::string csv = stats_csv(stats);
  if (has(cfg, "out")) {
    write_csv_file(str(cfg, "out"), cfg, csv);
  } else {
    out << csv_with_provenance(cfg, csv);
  }
  if (has(cfg, "summary")) {
    OrderedJson body;
    body["samples"] = stats.samples;
    body["sites"] = stats.sites.size();
    body["split_half_gap"] = stats.split_half_gap;
    body["parity_occupation"] = {{"even", stats.parity_occupation[0]}, {"odd", stats.parity_occupation[1]}};
    double mean_violation = 0;
    for (double x : stats.violation_rate) mean_violation += x;
    if (!stats.violation_rate.empty()) mean_violation /= static_cast<double>(stats.violation_rate.size());
    body["mean_violation_rate"] = mean_violation;
    write_json_file(str(cfg, "summary"), cfg, body);
  }
  return 0;
}

OrderedJson atlas_json(const LatticeGraph& g, const Atlas& x) {
  OrderedJson regions = OrderedJson::object();
  for (std::size_t i = 0; i < x.patterns.size(); ++i) regions[x.patterns[i].to_string()] = ids(x.regions[i]);
  AtlasClass cls = classify_atlas(g, x);
  OrderedJson j;
  j["regions"] = regions;
  j["overlap"] = ids(x.overlap);
  j["bad"] = ids(x.bad);
  j["star"] = ids(x.star);
  j["class"] = {{"l", cls.l}, {"m", cls.m}, {"n", cls.n}, {"nontrivial", cls.nontrivial},
                {"l_lower_bound", cls.l_lower_bound}};
  return j;
}

OrderedJson breakup_report_json(const BreakupReport& rep) {
  OrderedJson v = OrderedJson::array();
  for (const auto& x : rep.violations)
    v.push_back({{"clause", x.clause},
                 {"vertex", x.vertex == kNoVertex ? OrderedJson(nullptr) : OrderedJson(x.vertex)},
                 {"other", x.other == kNoVertex ? OrderedJson(nullptr) : OrderedJson(x.other)},
                 {"pattern", x.pattern}});
  return {{"ok", rep.ok}, {"violation_count", rep.violation_count}, {"violations", v}};
}

int decompose_cmd(const Json& cfg, std::ostream& out) {
  auto [g, f] = load_coloring_file(str(cfg, "coloring"));
  const Atlas z = decompose(g, f);
  OrderedJson body;
  body["graph"] = g.spec_string();
  body["q"] = f.q;
  body["decomposition"] = atlas_json(g, z);
  bool failed = false;
  std::string failure;
  if (cfg.at("breakup").get<bool>()) {
    if (!has(cfg, "p0")) throw PreconditionError("breakup needs field 'p0'");
    const Pattern p0 = Pattern::parse(str(cfg, "p0"), f.q);
    const VertexSet domain = parse_domain(g, str(cfg, "domain"));
    const std::string vtext = str(cfg, "v");
    const VertexSet v = vtext.empty() ? g.empty_set() : VertexSet::parse(g.num_vertices(), vtext);
    const int radius = cfg.at("radius").get<int>();
    const Atlas x = construct_breakup(g, f, v, domain, p0, radius);
    const BreakupReport rep = verify_breakup(g, x, f, domain, p0, radius, v.empty() ? nullptr : &v);
    OrderedJson b = atlas_json(g, x);
    b["p0"] = p0.to_string();
    b["radius"] = radius;
    b["verification"] = breakup_report_json(rep);
    body["breakup"] = b;
    if (!rep.ok) {
      failed = true;
      failure = "constructed breakup fails verification (" + std::to_string(rep.violation_count) + " violations)";
    }
  }
  emit_json(cfg, body, out);
  if (failed) throw InvariantViolation(failure);
  return 0;
}

int verify_lemmas(const Json& cfg, std::ostream& out) {
  const auto results = run_suites(str(cfg, "suite"), cfg.at("trials").get<long long>(),
                                  cfg.at("seed").get<std::uint64_t>());
  OrderedJson suites = OrderedJson::array();
  bool passed = true;
  for (const auto& r : results) {
    suites.push_back(r.to_json());
    passed = passed && r.passed();
  }
  OrderedJson body;
  body["passed"] = passed;
  body["suites"] = suites;
  emit_json(cfg, body, out);
  return passed ? 0 : 3;
}

std::vector<VertexSet> parse_sets(const LatticeGraph& g, const std::string& text) {
  std::vector<VertexSet> sets;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) sets.push_back(VertexSet::parse(g.num_vertices(), part));
  return sets;
}

SetParity parse_parity(const std::string& text) {
  if (text == "odd") return SetParity::Odd;
  if (text == "even") return SetParity::Even;
  throw PreconditionError("parity must be 'odd' or 'even'");
}

SeparatingParams separating_params(const Json& cfg) {
  SeparatingParams p;
  if (has(cfg, "s")) p.s = cfg["s"].get<double>();
  if (has(cfg, "t")) p.t = cfg["t"].get<double>();
  p.constant = cfg.at("constant").get<double>();
  return p;
}

OrderedJson separating_json(const SeparatingResult& r) {
  return {{"u", ids(r.u)},
          {"w", ids(r.separator)},
          {"s", r.s},
          {"t", r.t},
          {"clamped", r.clamped},
          {"warnings", r.warnings},
          {"boundary_edges", r.boundary_edges},
          {"size", r.u.size()},
          {"size_bound", r.size_bound},
          {"within_size_bound", r.within_size_bound},
          {"fallback_additions", r.fallback_additions},
          {"cover_sizes", {{"b", r.b_size}, {"b1", r.b1_size}, {"b2", r.b2_size}}}};
}

int approx_sets(const Json& cfg, std::ostream& out) {
  if (!has(cfg, "graph")) throw PreconditionError("sets mode needs field 'graph'");
  const LatticeGraph g = LatticeGraph::parse_spec(str(cfg, "graph"));
  const SetParity parity = parse_parity(str(cfg, "parity"));
  const OddSetCollection coll(g, parse_sets(g, str(cfg, "sets")), parity);

  OrderedJson per_set = OrderedJson::array();
  for (std::size_t i = 0; i < coll.size(); ++i) {
    const VertexSet& s = coll[i];
    FourCycleResult fc = four_cycle_check(g, s, parity);
    RevealedResult rv = revealed_vertices(g, s, parity);
    OrderedJson entry;
    entry["size"] = s.size();
    entry["four_cycle"] = {{"holds", fc.holds},
                           {"edges_checked", fc.edges_checked},
                           {"directions_checked", fc.directions_checked},
                           {"directions_skipped", fc.directions_skipped},
                           {"degree_sum_holds", fc.degree_sum_holds}};
    entry["revealed"] = {{"vertices", ids(rv.revealed)},
                         {"separation_applicable", rv.separation_applicable},
                         {"separates", rv.separates}};
    if (parity == SetParity::Odd) {
      IsoperimetryReport iso = isoperimetry_checks(g, s);
      entry["isoperimetry"] = {
          {"padded", iso.padded},
          {"contains_even", iso.contains_even},
          {"boundary", {{"applicable", iso.boundary_applicable}, {"lhs", iso.boundary}, {"rhs", iso.boundary_rhs},
                        {"holds", iso.boundary_holds}}},
          {"diameter", {{"applicable", iso.diameter_applicable}, {"lhs", iso.diameter_lhs}, {"rhs", iso.diameter_rhs},
                        {"holds", iso.diameter_holds}}}};
    }
    per_set.push_back(entry);
  }

  OrderedJson body;
  body["graph"] = g.spec_string();
  body["parity"] = str(cfg, "parity");
  body["sets"] = per_set;
  VertexSet w;
  if (has(cfg, "w")) {
    w = VertexSet::parse(g.num_vertices(), str(cfg, "w"));
    body["w"] = ids(w);
  } else {
    SeparatingResult sep = separating_set(g, coll, separating_params(cfg));
    for (const auto& msg : sep.warnings) std::cerr << "warning: " << msg << "\n";
    w = sep.separator;
    body["separating_set"] = separating_json(sep);
  }
  WeakApproximation wa = weak_approximation(g, w, coll);
  OrderedJson parts = OrderedJson::array();
  for (const auto& p : wa.parts) parts.push_back(ids(p));
  body["weak_approximation"] = {{"parts", parts},
                                {"star", ids(wa.star)},
                                {"size_bound", wa.size_bound},
                                {"location_bound", wa.location_bound}};
  if (cfg.at("exhaustive").get<bool>()) {
    WeakFamilyReport fam = weak_approximation_family(g, w);
    body["family"] = {{"sets_separated", fam.sets_separated},
                      {"distinct_approximations", fam.distinct_approximations},
                      {"family_bound", fam.family_bound}};
  }
  emit_json(cfg, body, out);
  return 0;
}

int approx_coloring(const Json& cfg, std::ostream& out) {
  auto [g, f] = load_coloring_file(str(cfg, "coloring"));
  if (has(cfg, "graph") && !(LatticeGraph::parse_spec(str(cfg, "graph")) == g))
    throw PreconditionError("colouring file graph differs from field 'graph'");
  if (!has(cfg, "p0")) throw PreconditionError("coloring mode needs field 'p0'");
  const Pattern p0 = Pattern::parse(str(cfg, "p0"), f.q);
  const int radius = cfg.at("radius").get<int>();
  const Atlas x = construct_breakup(g, f, g.empty_set(), g.all(), p0, radius);

  OrderedJson body;
  body["graph"] = g.spec_string();
  body["breakup"] = atlas_json(g, x);
  VertexSet w;
  if (has(cfg, "w")) {
    w = VertexSet::parse(g.num_vertices(), str(cfg, "w"));
  } else {
    // One separator for the class-1 regions (odd sets), one for class 0 (even sets).
    w = g.empty_set();
    OrderedJson seps = OrderedJson::array();
    for (int cls = 0; cls < 2; ++cls) {
      std::vector<VertexSet> sets;
      for (std::size_t i = 0; i < x.patterns.size(); ++i)
        if (x.patterns[i].pattern_class() == cls) sets.push_back(x.regions[i]);
      const OddSetCollection coll(g, sets, cls == 1 ? SetParity::Odd : SetParity::Even);
      SeparatingResult sep = separating_set(g, coll, separating_params(cfg));
      for (const auto& msg : sep.warnings) std::cerr << "warning: " << msg << "\n";
      w |= sep.separator;
      seps.push_back(separating_json(sep));
    }
    body["separating_sets"] = seps;
  }
  body["w"] = ids(w);
  const Approximation a = approximate_atlas(g, x, w);
  const ApproximationReport rep = verify_approximation(g, a, x, cfg.at("constant").get<double>());
  OrderedJson ap = OrderedJson::object();
  for (std::size_t i = 0; i < a.patterns.size(); ++i) ap[a.patterns[i].to_string()] = ids(a.a_p[i]);
  body["approximation"] = {{"a_p", ap}, {"a_star", ids(a.a_star)}, {"a_2star", ids(a.a_2star)}};
  OrderedJson clauses = OrderedJson::array();
  for (const auto& c : rep.clauses)
    clauses.push_back({{"clause", c.clause},
                       {"holds", c.holds},
                       {"witness", c.witness == kNoVertex ? OrderedJson(nullptr) : OrderedJson(c.witness)},
                       {"detail", c.detail}});
  body["verification"] = {{"ok", rep.ok}, {"l", rep.l}, {"clauses", clauses}};
  emit_json(cfg, body, out);
  return 0;
}

int approx(const Json& cfg, std::ostream& out) {
  const bool sets = has(cfg, "sets"), coloring = has(cfg, "coloring");
  if (sets == coloring) throw PreconditionError("approx needs exactly one of 'sets' and 'coloring'");
  return sets ? approx_sets(cfg, out) : approx_coloring(cfg, out);
}

}  // namespace

int dispatch(const Json& cfg, std::ostream& out) {
  const std::string command = str(cfg, "command");
  if (command == "exact-count") return exact_count(cfg, out);
  if (command == "marginal") return marginal(cfg, out);
  if (command == "toy-ratio") return toy(cfg, out);
  if (command == "sample") return sample(cfg, out);
  if (command == "decompose") return decompose_cmd(cfg, out);
  if (command == "verify-lemmas") return verify_lemmas(cfg, out);
  if (command == "approx") return approx(cfg, out);
  throw PreconditionError("unknown command '" + command + "'");
}

}  // namespace chroma::cli
