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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorr/correlation.hpp"
#include "qcorr/scenario.hpp"

namespace qcorr {

struct DecompositionResult {
  std::string name;
  bool spectral = false;
  std::size_t components = 0;
  std::vector<double> weights;
  CorrelationSplit split;
};

/// Everything a report prints. Values are copied from engine outputs; the
/// emitters never recompute them.
struct ReportDocument {
  std::string scenario;
  std::string description;
  std::string mode;  // "quantum" | "classical"
  std::map<std::string, double> params;

  DiscreteMeasure a1_measure;
  DiscreteMeasure a2_measure;
  std::vector<DecompositionResult> decompositions;

  // Quantum: the joint passes check_joint. Classical: the joint kernel is
  // row-wise marginally consistent with the two observables.
  bool joint_consistent = false;
  // Classical only.
  std::optional<bool> a1_deterministic;
  std::optional<bool> a2_deterministic;
  std::vector<std::string> notes;

  // The joint / product-of-marginals pair and rho_t do not depend on the
  // decomposition; they are taken from the first result.
  const CorrelationSplit& primary() const { return decompositions.front().split; }
};

enum class ReportFormat { kTable, kJson };

/// `only` restricts a quantum run to one named decomposition; "spectral"
/// selects (or adds) the spectral one. Throws ValidationError for an unknown
/// name and propagates engine errors.
ReportDocument run_scenario(const Scenario& s, const std::optional<std::string>& only = std::nullopt);

nlohmann::ordered_json report_to_json(const ReportDocument& r);
std::string emit_report(const ReportDocument& r, ReportFormat format);

/// 6 significant digits, or "—" when the point is off support.
std::string format_cell(const std::optional<double>& v);

}  // namespace qcorr
