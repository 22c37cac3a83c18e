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

#include "oracle.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/examples.hpp"
#include "qcorr/report.hpp"

namespace qcorr {
namespace {

using nlohmann::json;

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

TEST(FormatCell, SixDigitsAndDash) {
  EXPECT_EQ(format_cell(4.0 / 3.0), "1.33333");
  EXPECT_EQ(format_cell(std::nullopt), "—");
}

TEST(Table, SeparableReport) {
  const auto text = emit_report(examples::run("i"), ReportFormat::kTable);
  EXPECT_TRUE(contains(text, "product_rule_residual: <1e-7: PASS")) << text;
  EXPECT_TRUE(contains(text, "1.33333")) << text;
  EXPECT_TRUE(contains(text, "rho_c and rho_e are relative to the stated decomposition")) << text;
  // Outcome header in row-major order.
  const auto pp = text.find(oracle::kPP), pm = text.find(oracle::kPM), mp = text.find(oracle::kMP),
             mm = text.find(oracle::kMM);
  ASSERT_NE(mm, std::string::npos);
  EXPECT_LT(pp, pm);
  EXPECT_LT(pm, mp);
  EXPECT_LT(mp, mm);
}

TEST(Table, OffSupportCellsAreDashes) {
  const auto text = emit_report(examples::run("ii", {{"w1", 1.0}, {"w2", 0.0}, {"w3", 0.0}, {"w4", 0.0}}),
                                ReportFormat::kTable);
  EXPECT_TRUE(contains(text, "rho_t")) << text;
  const auto px = emit_report(examples::run("appendix-px", {{"w", 1.0}}), ReportFormat::kTable);
  EXPECT_TRUE(contains(px, "—")) << px;
}

TEST(Json, SeparableEntanglementAllOne) {
  const auto doc = json::parse(emit_report(examples::run("i"), ReportFormat::kJson));
  EXPECT_EQ(doc["schema"], "qcorr-report/1");
  for (const auto& v : doc["decompositions"][0]["rho_e"]) EXPECT_EQ(v.get<double>(), 1.0);
  EXPECT_EQ(doc["decompositions"][0]["product_rule"], "PASS");
}

TEST(Json, FullPrecision) {
  const auto r = examples::run("i");
  const auto doc = json::parse(emit_report(r, ReportFormat::kJson));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(doc["rho_t"][i].get<double>(), *r.primary().rho_t.at(i));
}

TEST(Json, OffSupportIsNull) {
  const auto doc = json::parse(emit_report(examples::run("appendix-px", {{"w", 1.0}}), ReportFormat::kJson));
  EXPECT_EQ(doc["rho_t"][0].get<double>(), 1.0);
  for (int i = 1; i < 4; ++i) EXPECT_TRUE(doc["rho_t"][i].is_null());
}

TEST(Notes, ConcentratedAppendixCase) {
  const auto r = examples::run("appendix-px", {{"w", 1.0}});
  bool found = false;
  for (const auto& n : r.notes) found = found || contains(n, "concentrated at " + oracle::kPP);
  EXPECT_TRUE(found);
  const auto& s = r.primary();
  EXPECT_EQ(s.rho_t.support(), std::vector<std::size_t>{0});
  EXPECT_NEAR(*s.rho_t.at(oracle::kPP), 1.0, 1e-9);
}

TEST(Notes, SpectralFlag) {
  const auto r = examples::run("appendix");
  bool found = false;
  for (const auto& n : r.notes) found = found || contains(n, "spectral (one of many)");
  EXPECT_TRUE(found);
}

TEST(Run, DecompositionFilter) {
  const auto s = examples::build("iii");
  const auto mixed = run_scenario(s, "mixed");
  ASSERT_EQ(mixed.decompositions.size(), 1u);
  EXPECT_EQ(mixed.decompositions[0].name, "mixed");
  const auto spectral = run_scenario(s, "spectral");
  EXPECT_TRUE(spectral.decompositions[0].spectral);
  try {
    run_scenario(s, "nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationError);
  }
}

}  // namespace
}  // namespace qcorr
