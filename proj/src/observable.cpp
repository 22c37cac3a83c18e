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

#include "qcorr/observable.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr {

Povm::Povm(OutcomeSpace space, std::vector<ComplexMatrix> effects)
    : space_(std::move(space)), effects_(std::move(effects)) {
  if (effects_.size() != space_.size())
    throw Error(ErrorCode::kInvalidPovm, "POVM has " + std::to_string(effects_.size()) + " effects for " +
                                             std::to_string(space_.size()) + " outcomes");
  const std::size_t n = effects_.front().dim();
  const double tol = validation_eps();
  ComplexMatrix sum(n);
  for (std::size_t i = 0; i < effects_.size(); ++i) {
    const auto& e = effects_[i];
    if (e.dim() != n) throw Error(ErrorCode::kDimensionMismatch, "POVM effects have different dimensions");
    if (!e.is_hermitian(tol))
      throw Error(ErrorCode::kInvalidPovm, "effect '" + space_.label(i) + "' is not Hermitian");
    const double lo = eigen_hermitian(e).values.front();
    if (lo < -tol) {
      std::ostringstream os;
      os << "effect '" << space_.label(i) << "' is not positive (eigenvalue " << lo << ")";
      throw Error(ErrorCode::kInvalidPovm, os.str());
    }
    sum += e;
  }
  const double defect = sum.max_abs_diff(ComplexMatrix::identity(n));
  if (defect > tol) {
    std::ostringstream os;
    os << "effects do not sum to the identity (max deviation " << defect << ")";
    throw Error(ErrorCode::kInvalidPovm, os.str());
  }

  projective_ = true;
  for (std::size_t i = 0; i < effects_.size() && projective_; ++i) {
    if ((effects_[i] * effects_[i]).max_abs_diff(effects_[i]) > tol) projective_ = false;
    for (std::size_t j = i + 1; j < effects_.size() && projective_; ++j)
      if ((effects_[i] * effects_[j]).max_abs() > tol) projective_ = false;
  }
}

Povm pvm_from_operator(const ComplexMatrix& op, std::optional<std::vector<std::string>> labels) {
  const auto eig = eigen_hermitian(op);
  const std::size_t n = op.dim();

  std::vector<double> group_values;
  std::vector<ComplexMatrix> effects;
  for (std::size_t k = n; k-- > 0;) {  // descending
    const auto& v = eig.vectors[k];
    if (group_values.empty() || std::abs(group_values.back() - eig.values[k]) > kEigenGroupTol) {
      group_values.push_back(eig.values[k]);
      effects.emplace_back(n);
    }
    effects.back() += ComplexMatrix::outer(v, v);
  }

  std::vector<std::string> names;
  if (labels) {
    if (labels->size() != group_values.size())
      throw Error(ErrorCode::kValidationError, "operator has " + std::to_string(group_values.size()) +
                                                   " distinct eigenvalues but " + std::to_string(labels->size()) +
                                                   " labels were given");
    names = std::move(*labels);
  } else {
    for (double v : group_values) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", std::abs(v) < kEigenGroupTol ? 0.0 : v);
      names.emplace_back(buf);
    }
  }
  return Povm(OutcomeSpace(std::move(names)), std::move(effects));
}

DiscreteMeasure outcome_measure(const Povm& a, const DensityOperator& d) {
  if (a.dim() != d.dim())
    throw Error(ErrorCode::kDimensionMismatch, "observable acts on dimension " + std::to_string(a.dim()) +
                                                   ", state has dimension " + std::to_string(d.dim()));
  std::vector<double> w;
  w.reserve(a.space().size());
  for (const auto& e : a.effects()) w.push_back(expectation(e, d));
  return DiscreteMeasure(a.space(), std::move(w));
}

DiscreteMeasure outcome_measure(const Povm& a, const PureState& psi) {
  if (a.dim() != psi.dim())
    throw Error(ErrorCode::kDimensionMismatch, "observable acts on dimension " + std::to_string(a.dim()) +
                                                   ", state has dimension " + std::to_string(psi.dim()));
  std::vector<double> w;
  w.reserve(a.space().size());
  for (const auto& e : a.effects()) w.push_back(expectation(e, psi));
  return DiscreteMeasure(a.space(), std::move(w));
}

Povm joint_from_commuting(const Povm& a1, const Povm& a2) {
  if (!a1.is_projective() || !a2.is_projective())
    throw Error(ErrorCode::kNotProjective, "joint construction needs two projection-valued measures");
  if (a1.dim() != a2.dim()) throw Error(ErrorCode::kDimensionMismatch, "observables act on different spaces");
  std::vector<ComplexMatrix> effects;
  effects.reserve(a1.space().size() * a2.space().size());
  for (std::size_t i = 0; i < a1.space().size(); ++i) {
    for (std::size_t j = 0; j < a2.space().size(); ++j) {
      const auto& e1 = a1.effect(i);
      const auto& e2 = a2.effect(j);
      ComplexMatrix prod = e1 * e2;
      if (prod.max_abs_diff(e2 * e1) > kEps)
        throw Error(ErrorCode::kNonCommuting, "effects '" + a1.space().label(i) + "' and '" +
                                                  a2.space().label(j) + "' do not commute");
      effects.push_back(std::move(prod));
    }
  }
  return Povm(OutcomeSpace::product(a1.space(), a2.space()), std::move(effects));
}

Povm marginal_observable(const Povm& joint, Side side) {
  const auto& space = joint.space();
  const auto& target = space.factor(side);
  std::vector<ComplexMatrix> effects(target.size(), ComplexMatrix(joint.dim()));
  for (std::size_t p = 0; p < space.size(); ++p) {
    auto [i, j] = space.split(p);
    effects[side == Side::kLeft ? i : j] += joint.effect(p);
  }
  return Povm(target, std::move(effects));
}

bool check_joint(const Povm& joint, const Povm& a1, const Povm& a2) {
  if (!joint.space().is_product()) return false;
  if (!(joint.space().left() == a1.space()) || !(joint.space().right() == a2.space())) return false;
  if (joint.dim() != a1.dim() || joint.dim() != a2.dim()) return false;
  const Povm m1 = marginal_observable(joint, Side::kLeft);
  const Povm m2 = marginal_observable(joint, Side::kRight);
  for (std::size_t i = 0; i < a1.space().size(); ++i)
    if (m1.effect(i).max_abs_diff(a1.effect(i)) > kEps) return false;
  for (std::size_t j = 0; j < a2.space().size(); ++j)
    if (m2.effect(j).max_abs_diff(a2.effect(j)) > kEps) return false;
  return true;
}

OutcomeSpace spin_half_space() { return OutcomeSpace({"+1/2", "-1/2"}); }

SpinZPair spin_z_pair() {
  const ComplexMatrix sz{{0.5, 0.0}, {0.0, -0.5}};
  const auto id = ComplexMatrix::identity(2);
  Povm a1 = pvm_from_operator(tensor(sz, id), spin_half_space().labels());
  Povm a2 = pvm_from_operator(tensor(id, sz), spin_half_space().labels());
  Povm joint = joint_from_commuting(a1, a2);
  return {std::move(a1), std::move(a2), std::move(joint)};
}

}  // namespace qcorr
