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

#include <optional>
#include <string>
#include <vector>

#include "qcorr/hilbert.hpp"
#include "qcorr/measure.hpp"

namespace qcorr {

/// Finite-outcome POVM: one positive effect per outcome label, summing to
/// the identity. Projectivity is detected numerically on construction.
class Povm {
 public:
  /// Throws DimensionMismatch or InvalidPovm.
  Povm(OutcomeSpace space, std::vector<ComplexMatrix> effects);

  const OutcomeSpace& space() const noexcept { return space_; }
  const std::vector<ComplexMatrix>& effects() const noexcept { return effects_; }
  const ComplexMatrix& effect(std::size_t i) const { return effects_.at(i); }
  const ComplexMatrix& effect(const std::string& label) const { return effects_[space_.index_of(label)]; }
  std::size_t dim() const noexcept { return effects_.front().dim(); }
  bool is_projective() const noexcept { return projective_; }

 private:
  OutcomeSpace space_;
  std::vector<ComplexMatrix> effects_;
  bool projective_ = false;
};

/// PVM of a self-adjoint operator. Eigenvalues within kEigenGroupTol share an
/// outcome; outcomes are ordered by descending eigenvalue. `labels`, when
/// given, must have one entry per distinct eigenvalue; otherwise the value
/// is printed with %.6g.
Povm pvm_from_operator(const ComplexMatrix& op, std::optional<std::vector<std::string>> labels = std::nullopt);

/// A(D)(x) = Tr(E(x) D).
DiscreteMeasure outcome_measure(const Povm& a, const DensityOperator& d);
DiscreteMeasure outcome_measure(const Povm& a, const PureState& psi);

/// Effects E1(x)E2(y) on the product space. Both inputs must be PVMs with
/// pairwise commuting effects (NotProjective / NonCommuting otherwise).
Povm joint_from_commuting(const Povm& a1, const Povm& a2);

/// Sums the effects of a joint over the other factor.
Povm marginal_observable(const Povm& joint, Side side);

/// True iff both marginal observables of `joint` match a1, a2 within kEps.
bool check_joint(const Povm& joint, const Povm& a1, const Povm& a2);

struct SpinZPair {
  Povm a1;     // (1/2 P+ - 1/2 P-) ⊗ I
  Povm a2;     // I ⊗ (1/2 P+ - 1/2 P-)
  Povm joint;  // P++, P+-, P-+, P--
};

/// Outcome labels are "+1/2" and "-1/2".
SpinZPair spin_z_pair();
OutcomeSpace spin_half_space();

}  // namespace qcorr
