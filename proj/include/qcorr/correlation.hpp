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

// Total correlation between two observables and its split, relative to a
// convex decomposition of the state, into a classical part and an
// entanglement part:
//
//   rho_t = d J(D)         / d (A1(D) ⊠ A2(D))
//   rho_c = d Σ w A1⊠A2(P) / d (A1(D) ⊠ A2(D))
//   rho_e = d J(D)         / d Σ w A1⊠A2(P)
//
// so that rho_c * rho_e = rho_t wherever all three are defined. rho_t does
// not depend on the decomposition; rho_c and rho_e do.

#pragma once

#include <optional>
#include <string>

#include "qcorr/hilbert.hpp"
#include "qcorr/measure.hpp"
#include "qcorr/observable.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr {

/// The three measures and three densities of one correlation analysis. Used
/// by both the quantum engine and the classical frame.
struct CorrelationSplit {
  DiscreteMeasure joint;              // outcome measure of the joint observable
  DiscreteMeasure marginal_product;   // product of the two marginal outcome measures
  DiscreteMeasure classical_product;  // decomposition-weighted mixture of products
  DensityFunction rho_t;
  std::optional<DensityFunction> rho_c;
  std::optional<DensityFunction> rho_e;
  // Set when the corresponding density does not exist (absolute continuity
  // fails); holds the engine's message.
  std::optional<std::string> rho_c_error;
  std::optional<std::string> rho_e_error;
  // max |rho_c * rho_e - rho_t| over the common support; empty unless both
  // factors exist.
  std::optional<double> product_rule_residual;

  bool product_rule_holds() const {
    return product_rule_residual && *product_rule_residual < kProductRuleTol;
  }
};

/// Builds the densities from the three measures. A missing rho_t is an
/// error (thrown); missing rho_c / rho_e are recorded in the result.
CorrelationSplit split_correlation(DiscreteMeasure joint, DiscreteMeasure marginal_product,
                                   DiscreteMeasure classical_product);

double product_rule_residual(const DensityFunction& rho_t, const DensityFunction& rho_c,
                             const DensityFunction& rho_e);

/// Σ_i w_i A1(P_i) ⊠ A2(P_i).
DiscreteMeasure classical_product_measure(const Povm& a1, const Povm& a2, const ConvexDecomposition& dec);

/// Throws JointMarginalMismatch when `joint` is not a joint of a1, a2, and
/// AbsoluteContinuityViolation when the density does not exist.
DensityFunction total_correlation(const Povm& joint, const Povm& a1, const Povm& a2, const DensityOperator& d);
DensityFunction classical_correlation(const Povm& a1, const Povm& a2, const ConvexDecomposition& dec);
DensityFunction entanglement(const Povm& joint, const Povm& a1, const Povm& a2, const ConvexDecomposition& dec);

struct CorrelationReport {
  CorrelationSplit split;
  // The decomposition was not supplied and spectral_decompose picked one of
  // the many possible ones.
  bool spectral_default = false;
};

CorrelationReport correlation_report(const Povm& joint, const Povm& a1, const Povm& a2,
                                     const ConvexDecomposition& dec);
/// Uses the spectral decomposition of `d` and flags the report accordingly.
CorrelationReport correlation_report(const Povm& joint, const Povm& a1, const Povm& a2, const DensityOperator& d);

}  // namespace qcorr
