#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chroma_cli/app.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "chroma");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = chroma::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "chroma_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, ExactCountOnTwoByTwo) {
  Outcome o = run({"exact-count", "--graph", "dims=2,2;periodic=0,0", "--q", "3", "--method", "both"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["count"], "18");
}

TEST(Cli, BadInputsExitWithOne) {
  EXPECT_EQ(run({"exact-count", "--graph", "dims=2,2;periodic=0,0", "--q", "x"}).code, 1);
  EXPECT_EQ(run({"exact-count", "--nonsense"}).code, 1);
  EXPECT_EQ(run({"exact-count", "--q", "3"}).code, 1);  // graph missing
  const auto bad = scratch("bad.json");
  write(bad, "{\"command\": \"exact-count\", ");
  EXPECT_EQ(run({"--config", bad.string()}).code, 1);
  const auto unknown = scratch("unknown.json");
  write(unknown, R"({"command": "exact-count", "graph": "dims=2,2;periodic=0,0", "q": 3, "colour": 1})");
  EXPECT_EQ(run({"--config", unknown.string()}).code, 1);
  const auto mismatched = scratch("mismatched.json");
  write(mismatched, R"({"command": "marginal", "graph": "dims=3,3;periodic=0,0", "q": 3})");
  EXPECT_EQ(run({"exact-count", "--config", mismatched.string()}).code, 1);
}

TEST(Cli, SampleIsReproducibleAndReplayable) {
  const std::vector<std::string> args = {"sample", "--graph", "dims=4,4;periodic=0,0", "--q", "3", "--boundary",
                                         "A=1;B=2,3", "--sweeps", "200", "--burn-in", "20", "--seed", "5"};
  Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string provenance, header;
  std::getline(lines, provenance);
  std::getline(lines, header);
  EXPECT_EQ(provenance.rfind("# provenance ", 0), 0u);
  EXPECT_EQ(header, "vertex_id,violation_rate,c1,c2,c3");

  const auto saved = scratch("sample.csv");
  write(saved, a.out);
  Outcome replay = run({"--config", saved.string()});
  ASSERT_EQ(replay.code, 0) << replay.err;
  EXPECT_EQ(replay.out, a.out);

  auto other = args;
  other.back() = "6";
  EXPECT_NE(run(other).out, a.out);
}

TEST(Cli, JsonOutputReplays) {
  Outcome a = run({"marginal", "--graph", "dims=3,3;periodic=0,0", "--q", "3", "--constraint", "pattern",
                   "--pattern", "A=1;B=2,3"});
  ASSERT_EQ(a.code, 0) << a.err;
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["distribution"][0], "8/9");
  const auto saved = scratch("marginal.json");
  write(saved, a.out);
  Outcome replay = run({"--config", saved.string()});
  ASSERT_EQ(replay.code, 0) << replay.err;
  EXPECT_EQ(replay.out, a.out);
}

TEST(Cli, VerifyLemmasSuite) {
  Outcome o = run({"verify-lemmas", "--suite", "four-cycle", "--trials", "100", "--seed", "7"});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  auto j = nlohmann::json::parse(o.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(run({"verify-lemmas", "--suite", "no-such-suite"}).code, 1);
}

TEST(Cli, ToyRatio) {
  Outcome o = run({"toy-ratio", "--graph", "dims=5,5;periodic=0,0", "--q", "4", "--u", "12", "--p0", "A=1,2;B=3,4",
                   "--p", "A=1,3;B=2,4"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["ratio"], "1/32");
  EXPECT_TRUE(j["equality"].get<bool>());
}
