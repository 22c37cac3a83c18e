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

// Named one- and two-qubit states. psi_plus / psi_minus are the spin-z
// up/down basis vectors; two-qubit vectors follow the Kronecker order
// (++, +-, -+, --).

#pragma once

#include "qcorr/hilbert.hpp"

namespace qcorr::qubit {

PureState up();      // psi_+
PureState down();    // psi_-
PureState x_up();    // +1/2 eigenvector of the x spin component
PureState x_down();

/// Qubit pure state with Bloch angles (theta, phi).
PureState bloch(double theta, double phi);

PureState product(const PureState& a, const PureState& b);

/// Bell basis: (++ + --)/√2, (++ − --)/√2, (+- + -+)/√2, (+- − -+)/√2.
PureState bell(int index);  // index in 1..4

}  // namespace qcorr::qubit
