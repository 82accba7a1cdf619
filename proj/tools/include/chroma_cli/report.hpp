#pragma once

#include <iosfwd>
#include <string>

#include "chroma_cli/config.hpp"

namespace chroma::cli {

// {version, config_hash, seed, config}; seed is null for commands without one.
OrderedJson provenance(const Json& cfg);

// Body with the provenance block as its first key.
OrderedJson with_provenance(const Json& cfg, const OrderedJson& body);

// Writes to cfg["out"] when present, else to `out`.
void emit_json(const Json& cfg, const OrderedJson& body, std::ostream& out);
void write_json_file(const std::string& path, const Json& cfg, const OrderedJson& body);
// CSV with a "# provenance {...}" first line.
void write_csv_file(const std::string& path, const Json& cfg, const std::string& csv);
std::string csv_with_provenance(const Json& cfg, const std::string& csv);

}  // namespace chroma::cli
