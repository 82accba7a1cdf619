#include "chroma_cli/app.hpp"

#include <iostream>
#include <map>
#include <memory>
#include <new>

#ifdef CHROMA_CLI11_SINGLE_HEADER
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif

#include "chroma/errors.hpp"
#include "chroma/parallel.hpp"
#include "chroma/version.hpp"
#include "chroma_cli/commands.hpp"
#include "chroma_cli/config.hpp"

namespace chroma::cli {
namespace {

std::string flag_name(const std::string& field) {
  std::string s = "--" + field;
  for (char& c : s)
    if (c == '_') c = '-';
  return s;
}

Json convert(const FieldSpec& f, const std::string& text) {
  const std::string flag = flag_name(f.name);
  std::size_t used = 0;
  try {
    switch (f.type) {
      case FieldType::Int: {
        long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
        break;
      }
      case FieldType::UInt: {
        if (!text.empty() && text[0] == '-') break;
        unsigned long long v = std::stoull(text, &used);
        if (used == text.size()) return v;
        break;
      }
      case FieldType::Double: {
        double v = std::stod(text, &used);
        if (used == text.size()) return v;
        break;
      }
      default: return text;
    }
  } catch (const std::logic_error&) {
  }
  throw PreconditionError(flag + " expects " +
                          (f.type == FieldType::Double ? "a number" : f.type == FieldType::UInt
                                                                          ? "a non-negative integer"
                                                                          : "an integer") +
                          ", got '" + text + "'");
}

struct SubcommandState {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> text;
  std::map<std::string, bool> flags;
  std::map<std::string, CLI::Option*> options;
  std::string config;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proper colourings of lattice boxes: exact counts, sampling, decompositions and checks", "chroma"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(0, 1);
  std::string top_config;
  app.add_option("--config", top_config, "JSON config (or a previous output) to replay");

  std::map<std::string, std::unique_ptr<SubcommandState>> subs;
  for (const auto& name : command_names()) {
    auto st = std::make_unique<SubcommandState>();
    st->app = app.add_subcommand(name, "");
    st->app->add_option("--config", st->config, "JSON config; flags override its fields");
    for (const auto& f : command_fields(name)) {
      std::string help = f.help;
      if (f.required) help += " [required]";
      else if (!f.fallback.is_null()) help += " [default " + f.fallback.dump() + "]";
      if (f.type == FieldType::Bool)
        st->options[f.name] = st->app->add_flag(flag_name(f.name), st->flags[f.name], help);
      else
        st->options[f.name] = st->app->add_option(flag_name(f.name), st->text[f.name], help);
    }
    subs[name] = std::move(st);
  }
  subs["exact-count"]->app->description("Count proper colourings exactly");
  subs["marginal"]->app->description("Exact single-site marginal");
  subs["toy-ratio"]->app->description("Droplet ratio for a pattern imposed on U^+");
  subs["sample"]->app->description("Heat-bath chains with a pattern boundary; per-site statistics as CSV");
  subs["decompose"]->app->description("Ordered/disordered regions of a colouring, optionally its breakup");
  subs["verify-lemmas"]->app->description("Randomized and exhaustive property suites");
  subs["approx"]->app->description("Odd-set geometry and approximations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    Json file_config;
    Json overrides = Json::object();
    const auto chosen = app.get_subcommands();
    if (chosen.empty()) {
      if (top_config.empty()) {
        err << app.help();
        return 1;
      }
      file_config = load_config_file(top_config);
    } else {
      const std::string name = chosen.front()->get_name();
      const auto& st = *subs.at(name);
      if (!st.config.empty()) file_config = load_config_file(st.config);
      if (!top_config.empty()) {
        if (!file_config.is_null()) throw PreconditionError("--config given twice");
        file_config = load_config_file(top_config);
      }
      if (file_config.is_object() && file_config.contains("command") && file_config["command"] != name)
        throw PreconditionError("config is for command " + file_config["command"].dump() + ", not " + name);
      overrides["command"] = name;
      for (const auto& f : command_fields(name)) {
        if (st.options.at(f.name)->count() == 0) continue;
        overrides[f.name] = f.type == FieldType::Bool ? Json(st.flags.at(f.name)) : convert(f, st.text.at(f.name));
      }
    }
    const Json cfg = resolve_config(file_config, overrides);
    set_max_threads(cfg.contains("threads") && !cfg["threads"].is_null() ? cfg["threads"].get<int>() : 0);
    return dispatch(cfg, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace chroma::cli
