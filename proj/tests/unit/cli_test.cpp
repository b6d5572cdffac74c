#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blocklie/cli.hpp"
#include "blocklie/config.hpp"
#include "blocklie/errors.hpp"

namespace blocklie {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
  json last() const {
    std::istringstream is(out);
    std::string line, prev;
    while (std::getline(is, line)) prev = line;
    return json::parse(prev);
  }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("blocklie_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const char* kZ4 = R"({"indeterminates": [], "delta3": 1,
  "generators": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]], "J": [0,0,0,0]})";

TEST(Cli, BracketExample) {
  const Result r = run({"bracket", "--spec-json", kZ4, "x{1,0,0,0}", "x{0,1,0,0}"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  const json j = r.last();
  EXPECT_EQ(j["schema"], cli::kReportSchema);
  EXPECT_EQ(j["result"], "x{2,1,1,0}");
  EXPECT_TRUE(j["paths_agree"].get<bool>());
}

TEST(Cli, ReduceExampleReplays) {
  const std::string trace = temp_file("trace.json", "");
  const Result r = run({"reduce", "--preset", "z4", "x{0,0,0,1}", "--trace-out", trace});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  const json j = r.last();
  EXPECT_EQ(j["trace"]["result"], "1");
  EXPECT_EQ(j["replay"], "ok");
  const Result rp = run({"replay", "--preset", "z4", trace});
  EXPECT_EQ(rp.code, cli::kOk) << rp.err;
  EXPECT_TRUE(rp.last()["ok"].get<bool>());
  std::filesystem::remove(trace);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"fuzz", "--preset", "case3", "--suite", "paths", "--samples", "20", "--seed", "5"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ValidateReportsViolations) {
  const Result ok = run({"validate", "--preset", "case4"});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_TRUE(ok.last()["valid"].get<bool>());
  const Result bad = run({"validate", "--spec-json",
                          R"({"indeterminates":[],"delta3":"1","generators":[[1,0,0,0],[0,0,1,0]],"J":[0,0,0,0]})"});
  EXPECT_EQ(bad.code, cli::kViolation);
  EXPECT_EQ(bad.last()["violations"].size(), 2u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"bracket", "x{1,0,0,0}", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"bracket", "--preset", "z4", "x{1,0}", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"bracket", "--preset", "z4", "t1", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"bracket", "--preset", "z4", "x{1,", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"bracket", "--spec-json", "{", "1", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"reduce", "--preset", "z4", "x{1,0,1,0}"}).code, cli::kUsage);
  EXPECT_EQ(run({"realize-check", "--case", "5"}).code, cli::kUsage);
}

TEST(Cli, RealizeCheckSelectsCaseFourReading) {
  const Result r = run({"realize-check", "--case", "4", "--reading", "both", "--samples", "40"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_EQ(r.last()["passing_readings"], 1);
}

TEST(Cli, IsoCheck) {
  const std::string a = temp_file("a.json", kZ4);
  const std::string b = temp_file("b.json", R"({"indeterminates": [], "delta3": 1,
    "generators": [[1,0,0,0],[0,2,0,0],[0,0,1,0],[0,0,0,1]], "J": [0,0,0,0]})");
  const std::string p = temp_file("p.json", R"({"a1": 0, "a2": 2, "a3": 0, "a4": 1})");
  const Result r = run({"iso-check", a, b, p, "--samples", "40"});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  EXPECT_TRUE(r.last()["hom_ok"].get<bool>());
  const std::string bad = temp_file("bad.json", R"({"a1": 0, "a2": 2, "a3": 0, "a4": 1, "chi": ["2","1","2","1"]})");
  EXPECT_EQ(run({"iso-check", a, b, bad, "--samples", "200"}).code, cli::kViolation);
  for (const auto& f : {a, b, p, bad}) std::filesystem::remove(f);
}

TEST(Cli, FuzzSuites) {
  for (const char* suite : {"closure", "paths", "hom"}) {
    const Result r = run({"fuzz", "--preset", "z4", "--suite", suite, "--samples", "30", "--seed", "7"});
    EXPECT_EQ(r.code, cli::kOk) << suite << ": " << r.out;
  }
  // The printed bracket violates Jacobi whenever delta3 != 0; the suite must say so.
  const Result j = run({"fuzz", "--preset", "z4", "--suite", "jacobi", "--samples", "30", "--seed", "7"});
  EXPECT_EQ(j.code, cli::kViolation);
  EXPECT_EQ(j.last()["counterexample"]["property"], "jacobi");
}

TEST(Config, SpecRoundTrip) {
  const SpecConfig c = parse_spec_config(
      R"({"indeterminates":["a"],"delta3":"a","generators":[[1,0,1,0],[0,0,"a",0],[0,1,0,0],[0,0,0,1]],"J":[0,1,0,1]})");
  EXPECT_TRUE(c.validate().valid());
  const SpecConfig back = parse_spec_config(spec_config_to_json(c));
  EXPECT_EQ(back.generators, c.generators);
  EXPECT_EQ(back.delta3, c.delta3);
  EXPECT_EQ(back.j, c.j);
  EXPECT_EQ(back.indeterminates, c.indeterminates);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_spec_config("[]"), ConfigError);
  EXPECT_THROW(parse_spec_config(R"({"delta3":1,"generators":[[1,0,0]],"J":[0,0,0,0]})"), ConfigError);
  EXPECT_THROW(parse_spec_config(R"({"delta3":"b","generators":[],"J":[0,0,0,0]})"), SyntaxError);
  EXPECT_THROW(parse_iso_config(R"({"a1":0})"), ConfigError);
  EXPECT_THROW(read_file("/nonexistent/blocklie.json"), ConfigError);
}

}  // namespace
}  // namespace blocklie
