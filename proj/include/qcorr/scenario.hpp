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

// Scenario files ("schema": "qcorr/1"). See docs/scenario-format.md.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qcorr/classical_frame.hpp"
#include "qcorr/hilbert.hpp"
#include "qcorr/observable.hpp"

namespace qcorr {

inline constexpr const char* kSchemaVersion = "qcorr/1";

struct NamedDecomposition {
  std::string name;
  // Empty means "spectral": resolved with spectral_decompose at run time.
  std::optional<ConvexDecomposition> decomposition;

  bool is_spectral() const noexcept { return !decomposition.has_value(); }
};

struct QuantumModel {
  DensityOperator state;
  Povm a1;
  Povm a2;
  // Empty means "auto-commuting": built with joint_from_commuting.
  std::optional<Povm> joint;
  std::vector<NamedDecomposition> decompositions;

  /// The explicit joint, or the commuting construction.
  Povm resolved_joint() const;
};

struct ClassicalModel {
  classical::PhaseSpace phase_space;
  DiscreteMeasure state;
  classical::ClassicalObservable a1;
  classical::ClassicalObservable a2;
  // Empty means "classical-product": the canonical row-wise product joint.
  std::optional<classical::ClassicalJoint> joint;

  classical::ClassicalJoint resolved_joint() const;
};

struct Scenario {
  std::string name;
  std::string description;
  // Parameter echo for built-in examples; informational only.
  std::map<std::string, double> params;
  std::variant<QuantumModel, ClassicalModel> model;

  bool is_quantum() const noexcept { return std::holds_alternative<QuantumModel>(model); }
};

/// Throws ParseError (syntax, with line/column, or a wrong-typed field with
/// its path) or ValidationError naming the broken invariant.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

Scenario parse_scenario(const nlohmann::ordered_json& doc);

/// Writes every number at full precision, so parse_scenario(to_json(s))
/// reproduces `s` bit for bit.
nlohmann::ordered_json scenario_to_json(const Scenario& s);
std::string scenario_to_text(const Scenario& s);

}  // namespace qcorr
