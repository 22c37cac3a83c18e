// Copyright 2026 The qcorr Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace qcorr::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kScenarioDir = QCORR_SCENARIO_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

TEST(Cli, RunBundledScenario) {
  const auto r = invoke({"run", (kScenarioDir / "separable.json").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("product_rule_residual: <1e-7: PASS"), std::string::npos);
}

TEST(Cli, PaperExampleJsonWithParams) {
  const auto r = invoke({"paper-example", "iii", "--params", "a=0.3,b=0.2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["rho_t"][0].get<double>(), 1.2, 1e-9);
  EXPECT_EQ(doc["decompositions"].size(), 3u);
}

TEST(Cli, DecompositionFlag) {
  const auto r = invoke({"paper-example", "iii", "--decomposition", "mixed", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  ASSERT_EQ(doc["decompositions"].size(), 1u);
  EXPECT_EQ(doc["decompositions"][0]["name"], "mixed");
}

TEST(Cli, ExportMatchesBundledFile) {
  const auto r = invoke({"export-example", "i"});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(kScenarioDir / "separable.json");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(r.out, ss.str());
}

TEST(Cli, Validate) {
  const auto ok = invoke({"validate", (kScenarioDir / "degenerate.json").string()});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_NE(ok.out.find("ok: degenerate"), std::string::npos) << ok.out;
  const auto js = invoke({"validate", (kScenarioDir / "classical-fuzzy.json").string(), "--format", "json"});
  EXPECT_EQ(json::parse(js.out)["valid"], true);
}

TEST(Cli, ValidationErrorExitsOneWithJsonObject) {
  const auto p = write_temp("qcorr-cli-trace.json", R"({
    "schema": "qcorr/1", "name": "bad", "mode": "quantum", "dim": 2,
    "state": {"matrix": [[0.5, 0], [0, 0.4]]},
    "observables": [{"labels": ["a", "b"], "effects": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]},
                    {"labels": ["a", "b"], "effects": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]}]
  })");
  const auto r = invoke({"validate", p.string(), "--format", "json"});
  EXPECT_EQ(r.code, kExitValidation);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["error"]["code"], "ValidationError");
  EXPECT_EQ(doc["error"]["exit_code"], 1);

  const auto table = invoke({"run", p.string()});
  EXPECT_EQ(table.code, kExitValidation);
  EXPECT_NE(table.err.find("error: ValidationError"), std::string::npos) << table.err;
  fs::remove(p);
}

TEST(Cli, EngineErrorExitsTwo) {
  // Explicit classical joint that puts mass where the marginal product has
  // none: rho_t does not exist.
  const auto p = write_temp("qcorr-cli-ac.json", R"({
    "schema": "qcorr/1", "name": "ac", "mode": "classical",
    "phase_space": ["w"], "state": {"weights": [1]},
    "observables": [{"outcomes": ["u", "d"], "kernel": [[1, 0]]},
                    {"outcomes": ["u", "d"], "kernel": [[1, 0]]}],
    "joint": {"kernel": [[0, 0, 0, 1]]}
  })");
  const auto r = invoke({"run", p.string(), "--format", "json"});
  EXPECT_EQ(r.code, kExitEngine);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["error"]["code"], "AbsoluteContinuityViolation");
  EXPECT_EQ(doc["error"]["exit_code"], 2);
  fs::remove(p);
}

TEST(Cli, UnknownExampleAndBadFlags) {
  EXPECT_EQ(invoke({"paper-example", "iv"}).code, kExitValidation);
  EXPECT_EQ(invoke({"paper-example", "i", "--format", "xml"}).code, kExitValidation);
  EXPECT_EQ(invoke({}).code, kExitValidation);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, SelftestReportsSeed) {
  const auto r = invoke({"selftest", "--seed", "5", "--trials", "20", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["seed"], 5);
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(doc["suites"].size(), 6u);
}

}  // namespace
}  // namespace qcorr::cli
