#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "proxima/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;

  json report() const {
    const auto pos = out.find("\n---\n");
    if (pos == std::string::npos) return json();
    return json::parse(out.substr(pos + 5));
  }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = proxima::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

class EnvSeed {
 public:
  explicit EnvSeed(const char* value) { setenv("PROXIMA_SEED", value, 1); }
  ~EnvSeed() { unsetenv("PROXIMA_SEED"); }
};

}  // namespace

TEST(CliVerify, OrbitalHolds) {
  const CliRun r = run({"verify", "--problem", "paper-example", "--class", "orbital", "--eta", "0.95"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("holds on the checked grid"), std::string::npos);
  const json j = r.report();
  EXPECT_EQ(j["report_version"], 1);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_TRUE(j["verdict"]["holds"].get<bool>());
  EXPECT_TRUE(j["boundedness"]["pass"].get<bool>());
  EXPECT_EQ(j["tool"].get<std::string>().rfind("proxima ", 0), 0u);
}

TEST(CliVerify, CyclicFailsWithWitness) {
  const CliRun r = run({"verify", "--problem", "paper-example", "--class", "cyclic", "--eta", "0.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness sigma = (-1, -0.5), theta = (1, -0.5)"), std::string::npos);
  EXPECT_NEAR(r.report()["verdict"]["witness"]["lhs"].get<double>(), 2.0017353582440522, 1e-15);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run({"verify", "--problem", "paper-example", "--class", "kannan"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--problem", "nope"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);

  const std::string bad = temp_path("proxima_bad.json");
  std::ofstream(bad) << "{\n  \"space\": {\"dim\": 2,,\n}";
  const CliRun r = run({"verify", "--config", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2, column 22"), std::string::npos) << r.err;
  std::remove(bad.c_str());
}

TEST(CliVerify, UnboundedRegionsCannotBeSampled) {
  const std::string path = temp_path("proxima_strips.json");
  std::ofstream(path) << R"({
    "space": {"dim": 2, "p": 2},
    "regions": {
      "omega": {"variant": "box", "lower": [-1, "-inf"], "upper": [-1, "inf"]},
      "delta": {"variant": "box", "lower": [1, "-inf"], "upper": [1, "inf"]}
    },
    "map": {
      "omega_rule": {"A": [[1, 0], [0, -3]], "b": [2, 0]},
      "delta_rule": {"A": [[1, 0], [0, -3]], "b": [-2, 0]}
    }
  })";
  const CliRun r = run({"verify", "--config", path, "--class", "orbital"});
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_NE(r.err.find("unbounded"), std::string::npos) << r.err;
  std::remove(path.c_str());
}

TEST(CliSolve, PaperSeed) {
  const CliRun r = run({"solve", "--problem", "paper-example", "--seed", "-1,-0.5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("converged"), std::string::npos);
  const json j = r.report()["report"];
  EXPECT_NEAR(j["bpp_omega"][0].get<double>(), -1.0, 1e-12);
  EXPECT_NEAR(j["bpp_omega"][1].get<double>(), 0.0, 1e-9);
  EXPECT_NEAR(j["bpp_delta"][0].get<double>(), 1.0, 1e-12);
}

TEST(CliSolve, DefaultSeedComesFromProblem) {
  const CliRun a = run({"solve", "--problem", "paper-example"});
  const CliRun b = run({"solve", "--problem", "paper-example", "--seed", "-1,-1/2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliSolve, OutsideDomainIsUsageError) {
  const CliRun r = run({"solve", "--problem", "paper-example", "--seed", "0,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("neither region"), std::string::npos);
  EXPECT_EQ(run({"solve", "--problem", "paper-example", "--seed", "1"}).code, 2);
}

TEST(CliSolve, IterationCapExitsOne) {
  const CliRun r = run({"solve", "--problem", "paper-example", "--max-iter", "6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.report()["report"]["converged"].get<bool>());
}

TEST(CliSolve, TraceFile) {
  const std::string path = temp_path("proxima_trace.csv");
  const CliRun r = run({"solve", "--problem", "paper-example", "--seed", "-1,-0.5", "--trace", path});
  ASSERT_EQ(r.code, 0);
  std::istringstream csv(slurp(path));
  std::string header, first;
  std::getline(csv, header);
  std::getline(csv, first);
  EXPECT_EQ(header, "n,side,x_1,x_2,gap");
  EXPECT_EQ(first.rfind("0,omega,-1,-0.5,2.1360009", 0), 0u);
  std::remove(path.c_str());
}

TEST(CliSolve, BoundEta) {
  const CliRun r = run({"solve", "--problem", "paper-example", "--bound-eta", "0.95"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.report()["report"]["prop24_bound_ok"].get<bool>());
}

TEST(CliDist, PaperExample) {
  const CliRun r = run({"dist", "--problem", "paper-example"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dist(omega, delta) = 2 "), std::string::npos) << r.out;
  EXPECT_EQ(r.report()["dist"].get<double>(), 2.0);
}

TEST(CliOrbit, FiveEntries) {
  const CliRun r = run({"orbit", "--problem", "paper-example", "--seed", "-1,-0.5", "--depth", "4"});
  EXPECT_EQ(r.code, 0);
  const json entries = r.report()["orbit"]["entries"];
  ASSERT_EQ(entries.size(), 5u);
  EXPECT_EQ(entries[1]["point"][1].get<double>(), 0.25);
  EXPECT_EQ(entries[1]["side"], "delta");
  EXPECT_NE(r.out.find("4 omega (-1, -0.013888888888888888)"), std::string::npos);
}

TEST(CliLemmas, HundredSeedsPass) {
  const CliRun r = run({"lemmas", "--problem", "paper-example", "--seeds", "100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("100/100 pass"), std::string::npos);
  EXPECT_EQ(r.report()["flags"]["base_seed"], 0);
}

TEST(CliLemmas, SeedFromEnvironment) {
  {
    EnvSeed env("41");
    const CliRun r = run({"lemmas", "--problem", "paper-example", "--seeds", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.report()["flags"]["base_seed"], 41);
  }
  {
    EnvSeed env("forty");
    EXPECT_EQ(run({"lemmas", "--problem", "paper-example", "--seeds", "5"}).code, 2);
  }
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--problem", "paper-example", "--class", "orbital", "--eta", "0.95"},
      {"verify", "--problem", "paper-example", "--class", "cyclic", "--eta", "0.5"},
      {"solve", "--problem", "paper-example", "--seed", "-1,-0.5"},
      {"dist", "--problem", "paper-example"},
      {"orbit", "--problem", "paper-example", "--seed", "-1,-0.5", "--depth", "4"},
      {"lemmas", "--problem", "paper-example", "--seeds", "20"},
  };
  for (const auto& c : commands) EXPECT_EQ(run(c).out, run(c).out) << c[0];
}

TEST(CliMisc, HelpAndVersion) {
  EXPECT_EQ(run({"--help"}).code, 0);
  const CliRun v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out.rfind("proxima ", 0), 0u);
  EXPECT_EQ(run({"dist", "--problem", "paper-example", "--config", "x.json"}).code, 2);
}
