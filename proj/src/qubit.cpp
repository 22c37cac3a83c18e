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

#include "qcorr/qubit.hpp"

#include <cmath>

#include "qcorr/errors.hpp"

namespace qcorr::qubit {

PureState up() { return PureState({1.0, 0.0}); }
PureState down() { return PureState({0.0, 1.0}); }
PureState x_up() { return PureState::normalized({1.0, 1.0}); }
PureState x_down() { return PureState::normalized({1.0, -1.0}); }

PureState bloch(double theta, double phi) {
  return PureState::normalized({std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
}

PureState product(const PureState& a, const PureState& b) { return tensor(a, b); }

PureState bell(int index) {
  switch (index) {
    case 1: return PureState::normalized({1.0, 0.0, 0.0, 1.0});
    case 2: return PureState::normalized({1.0, 0.0, 0.0, -1.0});
    case 3: return PureState::normalized({0.0, 1.0, 1.0, 0.0});
    case 4: return PureState::normalized({0.0, 1.0, -1.0, 0.0});
    default: throw Error(ErrorCode::kValidationError, "Bell index must be 1..4");
  }
}

}  // namespace qcorr::qubit
