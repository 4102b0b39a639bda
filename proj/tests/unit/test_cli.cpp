// Copyright 2026 The expmap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "expmap/cli.hpp"
#include "expmap/matrix_json.hpp"

namespace {

using namespace expmap;
using namespace expmap::cli;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::vector<const char*> argv{"expmap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

CliConfig parsed(std::vector<std::string> args) {
  std::ostringstream out, err;
  const ParseOutcome result = parse_args(args, out, err);
  EXPECT_TRUE(std::holds_alternative<CliConfig>(result)) << err.str();
  return std::holds_alternative<CliConfig>(result) ? std::get<CliConfig>(result) : CliConfig{};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("expmap_test_" + name);
}

TEST(ParseArgs, Defaults) {
  const CliConfig c = parsed({"dims"});
  EXPECT_EQ(c.command, Command::Dims);
  EXPECT_EQ(c.n, 2);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_FALSE(c.samples.has_value());
  EXPECT_EQ(c.restarts, 200);
  EXPECT_EQ(c.iterations, 50000);
  EXPECT_DOUBLE_EQ(c.tol, 1e-10);
  EXPECT_FALSE(c.output_path.has_value());
  EXPECT_FALSE(c.json);
}

TEST(ParseArgs, AllFlags) {
  const CliConfig c = parsed({"ppt", "--n", "3", "--seed", "18446744073709551615", "--samples", "7", "--restarts",
                              "9", "--iterations", "11", "--tol", "1e-8", "--out", "x.json", "--json"});
  EXPECT_EQ(c.command, Command::Ppt);
  EXPECT_EQ(c.n, 3);
  EXPECT_EQ(c.seed, 18446744073709551615ull);
  EXPECT_EQ(c.samples, 7);
  EXPECT_EQ(c.restarts, 9);
  EXPECT_EQ(c.iterations, 11);
  EXPECT_DOUBLE_EQ(c.tol, 1e-8);
  EXPECT_EQ(c.output_path, "x.json");
  EXPECT_TRUE(c.json);
}

TEST(ParseArgs, UsageErrorsExit64) {
  for (const auto& args : std::vector<std::vector<std::string>>{{},
                                                                {"frobnicate"},
                                                                {"dims", "--n", "1"},
                                                                {"dims", "--n", "two"},
                                                                {"dims", "--samples", "0"},
                                                                {"dims", "--tol", "0"},
                                                                {"dims", "--tol", "-1"},
                                                                {"certify", "--restarts", "0"},
                                                                {"ppt", "--iterations", "0"},
                                                                {"dims", "--bogus"}}) {
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, exit_code::kUsage) << (args.empty() ? "<none>" : args.front());
    EXPECT_FALSE(o.err.empty());
  }
}

TEST(ParseArgs, HelpExitsZero) {
  const Outcome o = invoke({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("certify"), std::string::npos);
}

TEST(ExitCodes, FixtureVerdicts) {
  using V = Verdict;
  EXPECT_EQ(exit_code_for(std::vector<V>{V::Match, V::Match}), exit_code::kOk);
  EXPECT_EQ(exit_code_for(std::vector<V>{V::Match, V::Inconclusive}), exit_code::kInconclusive);
  EXPECT_EQ(exit_code_for(std::vector<V>{V::Inconclusive, V::Mismatch}), exit_code::kViolation);
  EXPECT_EQ(exit_code_for(std::vector<V>{}), exit_code::kOk);
}

TEST(Run, ValidatesConfigDirectly) {
  CliConfig c;
  c.n = 1;
  std::ostringstream out, err;
  EXPECT_EQ(run(c, out, err), exit_code::kUsage);
}

TEST(Dims, TableRowsAndExitCode) {
  const Outcome o = invoke({"dims", "--n", "3", "--samples", "2000", "--seed", "1"});
  EXPECT_EQ(o.code, exit_code::kOk);
  EXPECT_NE(o.out.find("W: 192/192"), std::string::npos) << o.out;
  for (const char* row : {"V: 180/180", "N_Phi: 210/210", "P_Phi: 36/36", "W_perp: 24/24", "V_perp: 36/36"})
    EXPECT_NE(o.out.find(row), std::string::npos) << row;
}

TEST(Dims, UnderSampledExitsInconclusive) {
  EXPECT_EQ(invoke({"dims", "--n", "2", "--samples", "1"}).code, exit_code::kInconclusive);
}

TEST(Dims, JsonEnvelope) {
  const Outcome o = invoke({"dims", "--n", "2", "--json"});
  ASSERT_EQ(o.code, exit_code::kOk);
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["version"], "v1");
  EXPECT_EQ(doc["command"], "dims");
  EXPECT_EQ(doc["n"], 2);
  EXPECT_EQ(doc["seed"], 42);
  EXPECT_EQ(doc["results"]["measured"]["N_Phi"], 60);
}

TEST(Certify, ReportAndDeterminism) {
  const Outcome a = invoke({"certify", "--n", "2", "--seed", "42", "--json"});
  const Outcome b = invoke({"certify", "--n", "2", "--seed", "42", "--json"});
  ASSERT_EQ(a.code, exit_code::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["results"]["strong_spanning_dim"], 60);
  EXPECT_EQ(doc["results"]["strong_spanning_target"], 60);
  EXPECT_EQ(doc["results"]["exposedness_verdict"], "supported");
  const Outcome text = invoke({"certify", "--n", "2"});
  EXPECT_NE(text.out.find("60/60"), std::string::npos);
}

TEST(Witness, WritesHermitianUnitTraceMatrix) {
  const auto path = temp_path("w2.json");
  const Outcome o = invoke({"witness", "--n", "2", "--out", path.string()});
  ASSERT_EQ(o.code, exit_code::kOk) << o.err;
  std::ifstream file(path);
  const Matrix w = matrix_from_json(nlohmann::json::parse(file));
  ASSERT_EQ(w.rows(), 16);
  ASSERT_EQ(w.cols(), 16);
  EXPECT_TRUE(is_hermitian(w, 1e-12));
  EXPECT_NEAR(w.trace().real(), 1.0, 1e-10);
  std::filesystem::remove(path);
}

TEST(Witness, UnwritablePathExits74) {
  const Outcome o = invoke({"witness", "--n", "2", "--out", "/nonexistent-dir/for/sure/w.json"});
  EXPECT_EQ(o.code, exit_code::kIo);
  EXPECT_NE(o.err.find("cannot write"), std::string::npos);
  EXPECT_EQ(invoke({"dims", "--out", "/nonexistent-dir/for/sure/d.json"}).code, exit_code::kIo);
}

TEST(Kernel, PrintsPairsWithResiduals) {
  const Outcome o = invoke({"kernel", "--n", "3", "--json"});
  ASSERT_EQ(o.code, exit_code::kOk) << o.err;
  const auto doc = nlohmann::json::parse(o.out);
  const auto& pairs = doc["results"]["pairs"];
  ASSERT_EQ(pairs.size(), 4u * 3 + 4 + 4 * 2);
  for (const auto& p : pairs) {
    EXPECT_LE(p["residual"].get<double>(), 1e-10);
    EXPECT_EQ(p["x"].size(), 6u);
  }
  EXPECT_NE(invoke({"kernel"}).out.find("residual"), std::string::npos);
}

TEST(Ppt, ShortRunIsInconclusive) {
  const Outcome o = invoke({"ppt", "--n", "2", "--iterations", "1", "--json"});
  EXPECT_EQ(o.code, exit_code::kInconclusive);
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_FALSE(doc["results"]["found"].get<bool>());
  EXPECT_FALSE(doc["results"].contains("state"));
}

TEST(Ppt, OutFileCarriesEnvelope) {
  const auto path = temp_path("ppt.json");
  const Outcome o = invoke({"ppt", "--iterations", "1", "--out", path.string()});
  EXPECT_EQ(o.code, exit_code::kInconclusive);
  std::ifstream file(path);
  const auto doc = nlohmann::json::parse(file);
  EXPECT_EQ(doc["command"], "ppt");
  EXPECT_EQ(doc["results"]["iterations"], 1);
  std::filesystem::remove(path);
}

}  // namespace
