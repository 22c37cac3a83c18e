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

// Built-in two-qubit regression scenarios, all measured with the spin-z
// pair and its commuting joint:
//
//   i           separable    w1 P++ + w2 P-- + w3 P+- + w4 P-+
//   ii          bell-diagonal  w1 B1 + w2 B2 + w3 B3 + w4 B4 (Bell projectors)
//   iii         degenerate   the state with w1=w2=a, w3=w4=b (a+b=1/2) under
//                            three decompositions: product basis, Bell basis,
//                            and a P++, P--, B3, B4 mixture
//   iii-mixed   degenerate-mixed  same state, mixture decomposition only
//   appendix    separable-general  three-term mixture of random-looking
//                            product states P_i ⊗ Q_i
//   appendix-px separable-px  w P+ ⊗ P+ + (1-w) Px ⊗ Px

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcorr/report.hpp"
#include "qcorr/scenario.hpp"

namespace qcorr::examples {

using Params = std::map<std::string, double>;

const std::vector<std::string>& ids();
/// Throws UnknownExample.
Params default_params(const std::string& id);
/// Bundled file name (without directory) for an example id.
std::string file_name(const std::string& id);

/// Builds the scenario with `overrides` merged over the defaults. Throws
/// UnknownExample, or ValidationError for unknown keys or weights that are
/// negative or do not sum to one.
Scenario build(const std::string& id, const Params& overrides = {});

ReportDocument run(const std::string& id, const Params& overrides = {});

/// Parses "k=v,k=v". Throws ValidationError.
Params parse_params(const std::string& text);

}  // namespace qcorr::examples
