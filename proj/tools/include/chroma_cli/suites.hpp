#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma_cli/config.hpp"

namespace chroma::cli {

struct SuiteResult {
  std::string name;
  long long trials = 0;
  long long checks = 0;
  long long failures = 0;
  std::string first_failure;
  OrderedJson details = OrderedJson::object();

  bool passed() const { return failures == 0; }
  OrderedJson to_json() const;
};

const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all". Property checks that throw
// InvariantViolation are counted as failures rather than propagated.
std::vector<SuiteResult> run_suites(const std::string& name, long long trials, std::uint64_t seed);
SuiteResult run_suite(const std::string& name, long long trials, std::uint64_t seed);

// 4x4 box, S the central 2x2 block, the complement split into a top and a
// bottom arc. q = 3 shifts a class-1 top arc down by one row; q = 4 relabels
// two class-0 arcs in place.
RepairInstance repair_instance_4x4(const LatticeGraph& g, int q);

}  // namespace chroma::cli
