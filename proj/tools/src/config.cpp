#include "chroma_cli/config.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "chroma/errors.hpp"

namespace chroma::cli {

namespace {

using F = FieldType;

FieldSpec req(std::string name, F type, std::string help) { return {std::move(name), type, true, nullptr, std::move(help)}; }
FieldSpec opt(std::string name, F type, Json fallback, std::string help) {
  return {std::move(name), type, false, std::move(fallback), std::move(help)};
}

const std::map<std::string, std::vector<FieldSpec>>& table() {
  static const std::map<std::string, std::vector<FieldSpec>> t = [] {
    const FieldSpec threads{"threads", F::Int, false, nullptr, "worker cap (also CHROMA_THREADS)", false};
    const FieldSpec out = opt("out", F::String, nullptr, "output file (stdout when absent)");
    const FieldSpec graph = req("graph", F::String, "ambient graph, e.g. dims=5,5;periodic=0,0");
    const FieldSpec q = req("q", F::Int, "number of colours");
    const FieldSpec domain = opt("domain", F::String, "all", "domain as comma separated vertex ids, or 'all'");
    const FieldSpec constraint = opt("constraint", F::String, "free", "free | pattern | pinned");
    const FieldSpec pattern = opt("pattern", F::String, nullptr, "boundary pattern, e.g. A=1;B=2,3");
    const FieldSpec pins = opt("pins", F::String, nullptr, "colouring file with pinned colours (0 = free)");
    std::map<std::string, std::vector<FieldSpec>> m;
    m["exact-count"] = {graph, q, domain, constraint, pattern, pins,
                        opt("method", F::String, "backtracking", "backtracking | transfer | both"), out, threads};
    m["marginal"] = {graph, q, domain, constraint, pattern, pins,
                     opt("vertex", F::Int, nullptr, "vertex id (centre of the box when absent)"), out, threads};
    m["toy-ratio"] = {graph,
                      q,
                      domain,
                      req("u", F::String, "vertex ids of U"),
                      req("p0", F::String, "reference pattern"),
                      req("p", F::String, "pattern imposed on U^+"),
                      out,
                      threads};
    m["sample"] = {graph,
                   q,
                   domain,
                   req("boundary", F::String, "boundary pattern P0"),
                   opt("seed", F::UInt, 0, "random seed"),
                   req("sweeps", F::Int, "total sweeps per chain"),
                   opt("burn_in", F::Int, 0, "sweeps discarded before recording"),
                   opt("thin", F::Int, 1, "record every thin-th sweep"),
                   opt("algorithm", F::String, "heat-bath", "heat-bath | heat-bath+cluster"),
                   opt("random_scan", F::Bool, false, "random instead of row-major scan"),
                   opt("chains", F::Int, 1, "independent chains"),
                   opt("summary", F::String, nullptr, "optional JSON summary file"),
                   out,
                   threads};
    m["decompose"] = {req("coloring", F::String, "colouring file"),
                      opt("breakup", F::Bool, false, "also construct and verify the breakup"),
                      opt("p0", F::String, nullptr, "reference pattern for the breakup"),
                      opt("domain", F::String, "all", "domain for the breakup"),
                      opt("v", F::String, "", "vertex ids the breakup is seen from"),
                      opt("radius", F::Int, 5, "fattening radius"),
                      out,
                      threads};
    m["verify-lemmas"] = {req("suite", F::String, "suite name or 'all'"),
                          opt("trials", F::Int, 100, "randomized trials per suite"),
                          opt("seed", F::UInt, 0, "random seed"),
                          out,
                          threads};
    m["approx"] = {opt("graph", F::String, nullptr, "ambient graph (sets mode)"),
                   opt("sets", F::String, nullptr, "regular sets as id lists separated by '|'"),
                   opt("coloring", F::String, nullptr, "colouring file; its breakup is approximated"),
                   opt("p0", F::String, nullptr, "reference pattern (coloring mode)"),
                   opt("radius", F::Int, 5, "fattening radius (coloring mode)"),
                   opt("parity", F::String, "odd", "odd | even (for sets)"),
                   opt("w", F::String, nullptr, "separating set W (computed when absent)"),
                   opt("s", F::Double, nullptr, "threshold s (default sqrt d)"),
                   opt("t", F::Double, nullptr, "threshold t (default d/6)"),
                   opt("constant", F::Double, 1.0, "constant in the reported size bounds"),
                   opt("exhaustive", F::Bool, false, "enumerate approximation families (<= 16 vertices)"),
                   out,
                   threads};
    return m;
  }();
  return t;
}

bool type_matches(const Json& v, F type) {
  switch (type) {
    case F::Int: return v.is_number_integer();
    case F::UInt: return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
    case F::Double: return v.is_number();
    case F::Bool: return v.is_boolean();
    case F::String: return v.is_string();
  }
  return false;
}

const char* type_name(F type) {
  switch (type) {
    case F::Int: return "integer";
    case F::UInt: return "non-negative integer";
    case F::Double: return "number";
    case F::Bool: return "boolean";
    case F::String: return "string";
  }
  return "?";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"exact-count", "marginal", "toy-ratio", "sample",
                                                 "decompose",   "verify-lemmas", "approx"};
  return names;
}

const std::vector<FieldSpec>& command_fields(const std::string& command) {
  auto it = table().find(command);
  if (it == table().end()) throw PreconditionError("unknown command '" + command + "'");
  return it->second;
}

Json resolve_config(const Json& file_config, const Json& overrides) {
  if (!file_config.is_null() && !file_config.is_object()) throw PreconditionError("config must be a JSON object");
  Json merged = file_config.is_null() ? Json::object() : file_config;
  for (const auto& [k, v] : overrides.items()) merged[k] = v;
  if (!merged.contains("command") || !merged["command"].is_string())
    throw PreconditionError("config field 'command' missing or not a string");
  const std::string command = merged["command"];
  const auto& fields = command_fields(command);
  for (const auto& [k, v] : merged.items()) {
    if (k == "command") continue;
    bool known = false;
    for (const auto& f : fields) known = known || f.name == k;
    if (!known) throw PreconditionError("unknown field '" + k + "' for command " + command);
  }
  Json out = Json::object();
  out["command"] = command;
  for (const auto& f : fields) {
    if (merged.contains(f.name) && !merged[f.name].is_null()) {
      const Json& v = merged[f.name];
      if (!type_matches(v, f.type))
        throw PreconditionError("field '" + f.name + "' must be a " + type_name(f.type));
      out[f.name] = f.type == F::Double ? Json(v.get<double>()) : v;
    } else if (f.required) {
      throw PreconditionError("missing required field '" + f.name + "'");
    } else if (!f.fallback.is_null()) {
      out[f.name] = f.fallback;
    }
  }
  return out;
}

std::string canonical_dump(const Json& cfg) {
  Json hashed = Json::object();
  const auto& fields = command_fields(cfg.at("command").get<std::string>());
  for (const auto& [k, v] : cfg.items()) {
    bool keep = true;
    for (const auto& f : fields)
      if (f.name == k) keep = f.hashed;
    if (keep) hashed[k] = v;
  }
  return hashed.dump();
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const Json& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical_dump(cfg))));
  return buf;
}

Json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const std::string csv_tag = "# provenance ";
  if (text.rfind(csv_tag, 0) == 0) text = text.substr(csv_tag.size(), text.find('\n') - csv_tag.size());
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw PreconditionError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (j.is_object() && j.contains("provenance") && j["provenance"].is_object() && j["provenance"].contains("config"))
    return j["provenance"]["config"];
  if (j.is_object() && j.contains("config_hash") && j.contains("config") && j["config"].is_object())
    return j["config"];
  return j;
}

}  // namespace chroma::cli
