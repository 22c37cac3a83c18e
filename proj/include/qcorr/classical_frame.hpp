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

// Generalized classical statistics on a finite phase space. An observable is
// a stochastic kernel from phase-space points to outcome distributions; it
// acts on mixed states (measures on the phase space) affinely. Fuzzy
// observables have dispersion even at Dirac states.

#pragma once

#include <string>
#include <vector>

#include "qcorr/correlation.hpp"
#include "qcorr/measure.hpp"

namespace qcorr::classical {

using PhaseSpace = OutcomeSpace;

class ClassicalObservable {
 public:
  /// One row per phase-space point, each a probability measure on
  /// `codomain`. Throws ValidationError / SpaceMismatch.
  ClassicalObservable(PhaseSpace domain, OutcomeSpace codomain, std::vector<DiscreteMeasure> rows);
  /// Row-major weights, rows[k] belongs to domain point k.
  static ClassicalObservable from_rows(PhaseSpace domain, OutcomeSpace codomain,
                                       const std::vector<std::vector<double>>& rows);
  /// Kernel whose rows are Diracs at images[k].
  static ClassicalObservable deterministic(PhaseSpace domain, OutcomeSpace codomain,
                                           const std::vector<std::string>& images);

  const PhaseSpace& domain() const noexcept { return domain_; }
  const OutcomeSpace& codomain() const noexcept { return codomain_; }
  const std::vector<DiscreteMeasure>& rows() const noexcept { return rows_; }
  const DiscreteMeasure& row(std::size_t omega) const { return rows_.at(omega); }

 private:
  PhaseSpace domain_;
  OutcomeSpace codomain_;
  std::vector<DiscreteMeasure> rows_;
};

/// A classical observable whose codomain is a product space.
using ClassicalJoint = ClassicalObservable;

/// A(mu)(x) = Σ_ω mu(ω) kernel(ω)(x).
DiscreteMeasure apply(const ClassicalObservable& a, const DiscreteMeasure& mu);

/// Every row is a Dirac measure within kEps.
bool is_deterministic(const ClassicalObservable& a);

/// Row-wise product kernel: kernel(ω) = a1(ω) ⊠ a2(ω).
ClassicalJoint classical_joint(const ClassicalObservable& a1, const ClassicalObservable& a2);

/// True iff each row of `jo` has marginals equal to the rows of a1 and a2.
bool marginally_consistent(const ClassicalJoint& jo, const ClassicalObservable& a1, const ClassicalObservable& a2);

DensityFunction classical_rho_t(const ClassicalJoint& jo, const ClassicalObservable& a1,
                                const ClassicalObservable& a2, const DiscreteMeasure& mu);
DensityFunction classical_rho_c(const ClassicalObservable& a1, const ClassicalObservable& a2,
                                const DiscreteMeasure& mu);
DensityFunction classical_rho_e(const ClassicalJoint& jo, const ClassicalObservable& a1,
                                const ClassicalObservable& a2, const DiscreteMeasure& mu);

/// All three densities at once, with missing rho_c / rho_e recorded.
CorrelationSplit classical_split(const ClassicalJoint& jo, const ClassicalObservable& a1,
                                 const ClassicalObservable& a2, const DiscreteMeasure& mu);

}  // namespace qcorr::classical
