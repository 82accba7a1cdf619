#include "chroma_cli/report.hpp"

#include <fstream>
#include <ostream>

#include "chroma/errors.hpp"
#include "chroma/version.hpp"

namespace chroma::cli {

OrderedJson provenance(const Json& cfg) {
  OrderedJson p;
  p["version"] = std::string(kVersion);
  p["config_hash"] = config_hash(cfg);
  p["seed"] = cfg.contains("seed") ? OrderedJson(cfg["seed"].get<std::uint64_t>()) : OrderedJson(nullptr);
  p["config"] = OrderedJson::parse(canonical_dump(cfg));
  return p;
}

OrderedJson with_provenance(const Json& cfg, const OrderedJson& body) {
  OrderedJson out;
  out["provenance"] = provenance(cfg);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw PreconditionError("write to '" + path + "' failed");
}

}  // namespace

void write_json_file(const std::string& path, const Json& cfg, const OrderedJson& body) {
  write_text(path, with_provenance(cfg, body).dump(2) + "\n");
}

void emit_json(const Json& cfg, const OrderedJson& body, std::ostream& out) {
  if (cfg.contains("out"))
    write_json_file(cfg["out"].get<std::string>(), cfg, body);
  else
    out << with_provenance(cfg, body).dump(2) << "\n";
}

std::string csv_with_provenance(const Json& cfg, const std::string& csv) {
  return "# provenance " + provenance(cfg).dump() + "\n" + csv;
}

void write_csv_file(const std::string& path, const Json& cfg, const std::string& csv) {
  write_text(path, csv_with_provenance(cfg, csv));
}

}  // namespace chroma::cli
