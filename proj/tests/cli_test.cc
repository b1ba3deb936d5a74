// Copyright 2026 The genpol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "genpol/cli.h"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace genpol::cli {
namespace {

using ::testing::HasSubstr;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunArgs(std::vector<std::string> args, const Environment& env = {}) {
  args.insert(args.begin(), "genpol");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err, env);
  return {code, out.str(), err.str()};
}

// key=value fields of the first record starting with `prefix`.
std::map<std::string, std::string> Record(const std::string& text,
                                          const std::string& prefix) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(prefix + " ", 0) != 0) continue;
    std::map<std::string, std::string> fields;
    std::istringstream words(line.substr(prefix.size()));
    std::string w;
    while (words >> w) {
      const auto eq = w.find('=');
      if (eq != std::string::npos) fields[w.substr(0, eq)] = w.substr(eq + 1);
    }
    return fields;
  }
  return {};
}

double Num(const std::map<std::string, std::string>& r, const std::string& key) {
  const auto it = r.find(key);
  EXPECT_NE(it, r.end()) << key;
  return it == r.end() ? std::nan("") : std::stod(it->second);
}

std::string WriteFile(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

constexpr char kMalus[] = R"({
  "initial": {"theta_deg": 0, "branch": "+"},
  "stages": [{"theta_deg": 45}, {"theta_deg": 90}]
})";

TEST(Cli, AmplitudeCosineOfThirtyDegrees) {
  const Result r = RunArgs({"--machine", "amp", "30", "0", "+", "0", "0", "+"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rec = Record(r.out, "amplitude");
  EXPECT_NEAR(Num(rec, "re"), std::sqrt(3.0) / 2, 1e-15);
  EXPECT_NEAR(Num(rec, "im"), 0.0, 1e-15);
  EXPECT_NEAR(Num(rec, "abs2"), 0.75, 1e-15);
}

TEST(Cli, CircularToPerpendicularIsImaginary) {
  const Result r = RunArgs({"--machine", "amp", "45", "90", "+", "0", "0", "-"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rec = Record(r.out, "amplitude");
  EXPECT_NEAR(Num(rec, "re"), 0.0, 1e-15);
  EXPECT_NEAR(Num(rec, "im"), std::sqrt(0.5), 1e-15);
}

TEST(Cli, DegreesAndRadiansAgree) {
  const double t = 30 * std::numbers::pi / 180, a = 75 * std::numbers::pi / 180;
  const Result deg = RunArgs({"--machine", "prob", "30", "75", "-", "-20", "10", "+"});
  const Result rad = RunArgs({"--machine", "--rad", "prob", std::to_string(t),
                              std::to_string(a), "-", "-0.3490658503988659",
                              "0.17453292519943295", "+"});
  ASSERT_EQ(deg.code, kOk) << deg.err;
  ASSERT_EQ(rad.code, kOk) << rad.err;
  EXPECT_NEAR(Num(Record(deg.out, "probability"), "value"),
              Num(Record(rad.out, "probability"), "value"), 1e-6);
  EXPECT_LT(Num(Record(deg.out, "probability"), "abs_diff"), 1e-12);
}

TEST(Cli, HumanOutputMentionsUnits) {
  const Result r = RunArgs({"amp", "30", "0", "+", "0", "0", "+"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_THAT(r.out, HasSubstr("30deg"));
  EXPECT_THAT(r.out, HasSubstr("0.8660254038"));
}

TEST(Cli, StandardOperator) {
  const Result r = RunArgs({"--machine", "operator", "30", "0", "0", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto m = Record(r.out, "matrix");
  EXPECT_NEAR(std::stod(m.at("m11")), 0.5, 1e-15);
  EXPECT_NEAR(std::stod(m.at("m22")), -0.5, 1e-15);
  EXPECT_NEAR(std::stod(m.at("m12")), std::sqrt(3.0) / 2, 1e-15);
  EXPECT_LT(Num(Record(r.out, "invariants"), "residual"), 1e-12);
}

TEST(Cli, OperatorWithValues) {
  const Result r =
      RunArgs({"--machine", "operator", "10", "20", "10", "20", "3", "-2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto m = Record(r.out, "matrix");
  EXPECT_NEAR(std::stod(m.at("m11")), 3.0, 1e-12);
  EXPECT_NEAR(std::stod(m.at("m22")), -2.0, 1e-12);
}

TEST(Cli, EigenvectorsSatisfyEquation) {
  const Result r = RunArgs({"--machine", "eigvec", "20", "35", "-50", "10"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_LT(Num(Record(r.out, "eigvec branch=+"), "residual"), 1e-12);
  EXPECT_LT(Num(Record(r.out, "eigvec branch=-"), "residual"), 1e-12);
}

TEST(Cli, ExpectationExamples) {
  Result r = RunArgs({"--machine", "expect", "0", "0", "+", "45", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NEAR(Num(Record(r.out, "expectation"), "value"), 0.0, 1e-15);

  r = RunArgs({"--machine", "expect", "20", "0", "+", "20", "0"});
  EXPECT_NEAR(Num(Record(r.out, "expectation"), "value"), 1.0, 1e-12);

  const Result plus = RunArgs({"--machine", "expect", "17", "40", "+", "63", "-5",
                               "--basis-theta", "12", "--basis-alpha", "80"});
  const Result minus = RunArgs({"--machine", "expect", "17", "40", "-", "63", "-5"});
  const double p = Num(Record(plus.out, "expectation"), "value");
  EXPECT_NEAR(Num(Record(minus.out, "expectation"), "value"), -p, 1e-12);
  EXPECT_LT(Num(Record(plus.out, "expectation"), "abs_diff"), 1e-12);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(RunArgs({}).code, kUsageError);
  EXPECT_EQ(RunArgs({"amp", "1", "2"}).code, kUsageError);
  EXPECT_EQ(RunArgs({"amp", "1", "2", "x", "3", "4", "+"}).code, kUsageError);
  EXPECT_EQ(RunArgs({"amp", "a", "2", "+", "3", "4", "+"}).code, kUsageError);
  EXPECT_EQ(RunArgs({"bogus"}).code, kUsageError);
  EXPECT_EQ(RunArgs({"--deg", "--rad", "amp", "0", "0", "+", "0", "0", "+"}).code,
            kUsageError);
  EXPECT_EQ(RunArgs({"--tolerance", "-1", "expect", "0", "0", "+", "0", "0"}).code,
            kUsageError);
  Environment env;
  env.tolerance = "abc";
  EXPECT_EQ(RunArgs({"expect", "0", "0", "+", "0", "0"}, env).code, kUsageError);
}

TEST(Cli, HelpExitsCleanly) {
  const Result r = RunArgs({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_THAT(r.out, HasSubstr("simulate"));
}

TEST(Cli, SimulateExactMalus) {
  const std::string path = WriteFile("malus.json", kMalus);
  const Result r = RunArgs({"--machine", "simulate", path, "--exact"});
  ASSERT_EQ(r.code, kOk) << r.err;
  for (const char* s : {"++", "+-", "-+", "--"}) {
    EXPECT_NEAR(Num(Record(r.out, std::string("sequence outcome=") + s),
                    "probability"),
                0.25, 1e-15);
  }
  EXPECT_NEAR(Num(Record(r.out, "summary"), "total_probability"), 1.0, 1e-15);
}

TEST(Cli, SimulateSampledIsReproducible) {
  const std::string path = WriteFile("malus_sampled.json", kMalus);
  const std::vector<std::string> args = {"--machine", "simulate", path,
                                         "--trials", "200000", "--seed", "5"};
  const Result a = RunArgs(args);
  const Result b = RunArgs(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_LE(Num(Record(a.out, "summary"), "max_abs_deviation_sigma"), 5.0);
  const auto head = Record(a.out, "scenario");
  EXPECT_EQ(head.at("seed"), "5");
  EXPECT_EQ(head.at("trials"), "200000");
}

TEST(Cli, SimulateFileValuesAndOverrides) {
  const std::string path = WriteFile("seeded.json", R"({
    "initial": {"theta_deg": 10, "branch": "-"},
    "stages": [{"theta_deg": 70, "alpha_deg": 30}],
    "seed": 11, "trials": 1234
  })");
  Result r = RunArgs({"--machine", "simulate", path});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(Record(r.out, "scenario").at("seed"), "11");
  EXPECT_EQ(Record(r.out, "scenario").at("trials"), "1234");
  r = RunArgs({"--machine", "simulate", path, "--seed", "12"});
  EXPECT_EQ(Record(r.out, "scenario").at("seed"), "12");
}

TEST(Cli, StageCapPrecedence) {
  const std::string path = WriteFile("three.json", R"({
    "initial": {"theta_deg": 0, "branch": "+"},
    "stages": [{"theta_deg": 10}, {"theta_deg": 20}, {"theta_deg": 30}]
  })");
  Environment env;
  env.stage_cap = "2";
  Result r = RunArgs({"simulate", path, "--exact"}, env);
  EXPECT_EQ(r.code, kFileError);
  EXPECT_THAT(r.err, HasSubstr("stage"));
  r = RunArgs({"simulate", path, "--exact", "--stage-cap", "3"}, env);
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(RunArgs({"simulate", path, "--exact", "--stage-cap", "0"}).code,
            kUsageError);
}

TEST(Cli, SimulateFileErrors) {
  EXPECT_EQ(RunArgs({"simulate", "/nonexistent/x.json"}).code, kFileError);
  const std::string bad = WriteFile("bad.json", R"({"initial": {}, "stages": []})");
  EXPECT_EQ(RunArgs({"simulate", bad}).code, kFileError);
  std::string many = R"({"initial": {"theta_deg": 0, "branch": "+"}, "stages": [)";
  for (int i = 0; i < 21; ++i) many += std::string(i ? "," : "") + R"({"theta_deg": 5})";
  many += "]}";
  const Result r = RunArgs({"simulate", WriteFile("many.json", many), "--exact"});
  EXPECT_EQ(r.code, kFileError);
}

TEST(Cli, ToleranceFromFileIsOverriddenByEnvAndFlag) {
  // A file tolerance too tight for rounding turns the sum check into a failure.
  std::string body = R"({"initial": {"theta_deg": 13, "alpha_deg": 7, "branch": "+"}, "stages": [)";
  for (int i = 0; i < 12; ++i) {
    body += std::string(i ? "," : "") + R"({"theta_deg": )" + std::to_string(11 * i + 3) +
            R"(, "alpha_deg": )" + std::to_string(29 * i) + "}";
  }
  body += R"(], "tolerance": 1e-300})";
  const std::string path = WriteFile("tight.json", body);
  const Result tight = RunArgs({"simulate", path, "--exact"});
  if (tight.code == kInvariantFailure) {
    Environment env;
    env.tolerance = "1e-9";
    EXPECT_EQ(RunArgs({"simulate", path, "--exact"}, env).code, kOk);
    EXPECT_EQ(RunArgs({"--tolerance", "1e-9", "simulate", path, "--exact"}).code, kOk);
    env.tolerance = "1e-300";
    EXPECT_EQ(RunArgs({"--tolerance", "1e-9", "simulate", path, "--exact"}, env).code,
              kOk);
  } else {
    EXPECT_EQ(tight.code, kOk);
  }
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
  const std::vector<std::string> args = {"--machine", "verify", "--draws", "300",
                                         "--seed", "8"};
  const Result a = RunArgs(args);
  const Result b = RunArgs(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto s = Record(a.out, "summary");
  EXPECT_EQ(s.at("status"), "pass");
  EXPECT_EQ(s.at("suites"), "13");
  EXPECT_EQ(s.at("errata"), "5");
  EXPECT_FALSE(Record(a.out, "errata equation=Eq55").empty());
}

TEST(Cli, VerifyHumanSummary) {
  const Result r = RunArgs({"verify", "--draws", "100"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_THAT(r.out, HasSubstr("all invariants pass"));
}

TEST(Cli, VerifyFailureExitCode) {
  const Result r = RunArgs({"--tolerance", "1e-300", "verify", "--draws", "500"});
  EXPECT_EQ(r.code, kInvariantFailure);
}

TEST(ToRadians, Units) {
  EXPECT_DOUBLE_EQ(ToRadians(180, AngleUnit::kDegrees), std::numbers::pi);
  EXPECT_EQ(ToRadians(1.25, AngleUnit::kRadians), 1.25);
}

}  // namespace
}  // namespace genpol::cli
