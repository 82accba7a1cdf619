#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace chroma::cli {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

enum class FieldType { Int, UInt, Double, Bool, String };

struct FieldSpec {
  std::string name;
  FieldType type;
  bool required = false;
  Json fallback;      // null: optional with no default
  std::string help;
  bool hashed = true;  // false for fields that cannot change any output byte
};

const std::vector<std::string>& command_names();
// Fields accepted by a command, "command" itself excluded.
const std::vector<FieldSpec>& command_fields(const std::string& command);

// Overrides win over the file config. Unknown fields, wrong types and
// missing required fields raise PreconditionError. Defaults are filled in.
Json resolve_config(const Json& file_config, const Json& overrides);

// Sorted-key compact dump of the hashed fields.
std::string canonical_dump(const Json& cfg);
std::uint64_t fnv1a64(std::string_view text);
std::string config_hash(const Json& cfg);  // 16 hex digits

// A config file may also be a previous output: its provenance block is replayed.
Json load_config_file(const std::string& path);

}  // namespace chroma::cli
