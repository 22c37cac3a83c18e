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

namespace qcorr {

/// Threshold used by the correlation math itself (density supports,
/// absolute continuity, imaginary-part checks). Never changes at runtime.
inline constexpr double kEps = 1e-9;

/// Entrywise tolerance for reconstructing a state from a decomposition.
inline constexpr double kReconstructionTol = 1e-8;

/// Product rule |rho_c * rho_e - rho_t| acceptance bound.
inline constexpr double kProductRuleTol = 1e-7;

/// Eigenvalues closer than this are grouped into one outcome when a PVM is
/// built from a self-adjoint operator.
inline constexpr double kEigenGroupTol = 1e-7;

/// Tolerance for type-invariant validation (Hermiticity, trace, positivity,
/// weight sums). Defaults to kEps; QCORR_EPS in the environment overrides it.
double validation_eps();

}  // namespace qcorr
