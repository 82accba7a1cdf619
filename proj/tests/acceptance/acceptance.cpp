// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chroma/exact.hpp"
#include "chroma/generators.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"
#include "chroma/rng.hpp"
#include "chroma/sampler.hpp"
#include "chroma_cli/suites.hpp"

using namespace chroma;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LatticeGraph box(std::vector<int> dims) { return LatticeGraph(dims, std::vector<bool>(dims.size(), false)); }

// Walks all q^n assignments of the domain as an odometer, keeping the number of
// monochromatic induced edges up to date digit by digit.
unsigned long long brute_force_free(const LatticeGraph& g, const VertexSet& domain, int q) {
  const auto ids = domain.ids();
  const std::size_t n = ids.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (VertexId w : g.slots(ids[i]))
        if (w == ids[j]) adj[i].push_back(j);
  std::vector<int> colour(n, 0);
  long long clashes = 0;
  for (std::size_t i = 0; i < n; ++i) clashes += static_cast<long long>(adj[i].size());
  clashes /= 2;  // all colour 0: every edge clashes
  unsigned long long proper = 0;
  for (;;) {
    proper += clashes == 0;
    std::size_t pos = 0;
    for (; pos < n; ++pos) {
      const int before = colour[pos];
      const int after = before + 1 == q ? 0 : before + 1;
      for (std::size_t j : adj[pos]) clashes += (colour[j] == after) - (colour[j] == before);
      colour[pos] = after;
      if (after != 0) break;
    }
    if (pos == n) return proper;
  }
}

Verdict criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<LatticeGraph> ambients = {box({4, 4}), box({3, 5}), box({2, 3, 3}), box({3, 3, 3}),
                                              LatticeGraph({4, 4}, {true, true})};
  Rng rng(kSeed, 1);
  int mismatches = 0;
  std::size_t largest = 0;
  for (int i = 0; i < 100; ++i) {
    const LatticeGraph& g = ambients[i % ambients.size()];
    const int q = 3 + i % 3;
    const std::size_t size = 1 + rng.below(12);
    const VertexSet u = random_connected_set(g, size, rng);
    largest = std::max(largest, u.size());
    const auto fast = count_colorings(g, free_constraint(g, u, q)).count;
    if (fast != brute_force_free(g, u, q)) ++mismatches;
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 60,
          "100 instances, largest " + std::to_string(largest) + " vertices, " + std::to_string(mismatches) +
              " mismatches, " + std::to_string(secs) + " s"};
}

Verdict criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  // Every slab a x b x len with a <= b <= 3, len <= 5, under a free and a pattern
  // boundary; the 25 largest instances are checked.
  struct Instance {
    std::vector<int> dims;
    bool pattern;
  };
  std::vector<Instance> all;
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b)
      for (int len = 2; len <= 5; ++len)
        for (bool pattern : {false, true}) all.push_back({{a, b, len}, pattern});
  std::stable_sort(all.begin(), all.end(), [](const Instance& x, const Instance& y) {
    return x.dims[0] * x.dims[1] * x.dims[2] > y.dims[0] * y.dims[1] * y.dims[2];
  });
  all.resize(25);
  const Pattern p = Pattern::parse("A=1;B=2,3", 3);
  int mismatches = 0, done = 0;
  for (const auto& inst : all) {
    const LatticeGraph g = box(inst.dims);
    const ColoringConstraint c =
        inst.pattern ? pattern_boundary_constraint(g, g.all(), p) : free_constraint(g, g.all(), 3);
    if (transfer_count(g, c).count != count_colorings(g, c).count) ++mismatches;
    ++done;
  }
  const double secs = seconds_since(t0);
  return {done == 25 && mismatches == 0 && secs < 120,
          std::to_string(done) + " slabs up to 3x3x5, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(secs) + " s"};
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Verdict criterion3() {
  std::string detail;
  bool pass = true;
  for (int q = 3; q <= 8; ++q) {
    const long long want = q % 2 == 0 ? binom(q, q / 2) : 2 * binom(q, q / 2);
    const long long got = static_cast<long long>(enumerate_dominant(q).size());
    pass = pass && got == want;
    detail += (q > 3 ? " " : "") + std::string("q=") + std::to_string(q) + ":" + std::to_string(got);
  }
  return {pass, detail};
}

Verdict criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const LatticeGraph g = box({5, 5});
  const VertexSet centre = VertexSet::parse(25, "12");
  const Pattern p0 = Pattern::parse("A=1,2;B=3,4", 4);
  const auto both = static_cast<unsigned>(vertex_boundaries(g, centre).both.size());
  const ToyRatio adjacent = toy_ratio(g, g.all(), centre, p0, Pattern::parse("A=1,3;B=2,4", 4));
  const bool eq4 = adjacent.ratio == Rational(1, BigInt(1) << both) && adjacent.equality;
  const ToyRatio far = toy_ratio(g, g.all(), centre, p0, Pattern::parse("A=3,4;B=1,2", 4));
  const bool strict = far.ratio < adjacent.ratio;
  const VertexSet plus_shape = VertexSet::parse(25, "7,11,12,13,17");
  const auto edges = static_cast<unsigned>(edge_boundary(g, plus_shape).size());
  const ToyRatio odd = toy_ratio(g, g.all(), plus_shape, Pattern::parse("A=1,2;B=3,4,5", 5),
                                 Pattern::parse("A=1,2,3;B=4,5", 5));
  const bool eq5 = edges % 4 == 0 && odd.ratio == Rational(boost::multiprecision::pow(BigInt(4), edges / 4), boost::multiprecision::pow(BigInt(6), edges / 4));
  const double secs = seconds_since(t0);
  return {eq4 && strict && eq5 && secs < 600,
          "q=4 adjacent " + to_string(adjacent.ratio) + ", q=4 swapped " + to_string(far.ratio) + ", q=5 " +
              to_string(odd.ratio) + ", " + std::to_string(secs) + " s"};
}

Verdict criterion5() {
  const LatticeGraph g = box({5, 5});
  const ColoringConstraint c = pattern_boundary_constraint(g, g.all(), Pattern::parse("A=1;B=2,3", 3));
  const ExactMarginal m = exact_marginal(g, c, 12);
  const Rational threshold = Rational(1, 3) + Rational(1, 100);
  return {m.distribution[0] > threshold,
          "P(1) = " + to_string(m.distribution[0]) + " ~ " + std::to_string(m.distribution[0].convert_to<double>())};
}

Verdict criterion6() {
  ChainConfig cfg;
  cfg.graph = box({4, 4});
  cfg.domain = cfg.graph.all();
  cfg.boundary = Pattern::parse("A=1;B=2,3", 3);
  cfg.seed = kSeed;
  cfg.sweeps = 1000000;
  cfg.burn_in = 1000;
  const OrderStats stats = run_experiment(cfg);
  const VertexId centre = 10;
  const auto it = std::find(stats.sites.begin(), stats.sites.end(), centre);
  const auto& empirical = stats.occupation[it - stats.sites.begin()];
  const ExactMarginal exact =
      exact_marginal(cfg.graph, pattern_boundary_constraint(cfg.graph, cfg.graph.all(), cfg.boundary), centre);
  std::vector<double> target;
  for (const auto& r : exact.distribution) target.push_back(r.convert_to<double>());
  const double tv = tv_distance(empirical, target);

  const LatticeGraph small = box({2, 2});
  const ColoringConstraint free = free_constraint(small, small.all(), 3);
  std::vector<Coloring> states;
  enumerate_colorings(small, free, [&](const Coloring& f) { states.push_back(f); });
  const auto p = heat_bath_transition_matrix(small, free, states);
  double worst = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double row = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      row += p[i][j];
      worst = std::max(worst, std::abs(p[i][j] - p[j][i]));
    }
    worst = std::max(worst, std::abs(row - 1));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "TV %.5f over %lld samples, 2x2 kernel (%zu states) worst deviation %.1e", tv,
                stats.samples, states.size(), worst);
  return {tv <= 0.01 && worst <= 1e-12, buf};
}

Verdict from_suites(const std::vector<std::string>& names, long long trials) {
  bool pass = true;
  std::string detail;
  for (const auto& n : names) {
    const cli::SuiteResult r = cli::run_suite(n, trials, kSeed);
    pass = pass && r.passed();
    if (!detail.empty()) detail += ", ";
    detail += n + " " + std::to_string(r.checks) + " checks/" + std::to_string(r.failures) + " failures";
    if (!r.passed()) detail += " [" + r.first_failure + "]";
  }
  return {pass, detail};
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria = {
      criterion1,
      criterion2,
      criterion3,
      criterion4,
      criterion5,
      criterion6,
      [] { return from_suites({"breakup"}, 500); },
      [] { return from_suites({"repair"}, 1); },
      [] {
        return from_suites({"four-cycle", "revealed", "even-odd", "sizes", "co-connected", "boundary-connected",
                            "isoperimetry"},
                           100);
      },
      [] { return from_suites({"shearer", "z-bounds"}, 200); },
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("criterion %zu: %s (%s)\n", i + 1, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
