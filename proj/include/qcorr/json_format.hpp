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

#include <string>

#include <json.hpp>

namespace qcorr {

/// Indented JSON where arrays nested at most two deep (vectors, matrix rows,
/// complex pairs) stay on one line. Numbers keep full round-trip precision.
std::string pretty_json(const nlohmann::ordered_json& j);

}  // namespace qcorr
