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

#include "qcorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

void require_joint(const Povm& joint, const Povm& a1, const Povm& a2) {
  if (!check_joint(joint, a1, a2))
    throw Error(ErrorCode::kJointMarginalMismatch,
                "the joint observable's marginals do not reproduce the two observables");
}

DiscreteMeasure marginal_product_at(const Povm& a1, const Povm& a2, const DensityOperator& d) {
  return product(outcome_measure(a1, d), outcome_measure(a2, d));
}

}  // namespace

double product_rule_residual(const DensityFunction& rho_t, const DensityFunction& rho_c,
                             const DensityFunction& rho_e) {
  return density_product(rho_c, rho_e).max_abs_diff(rho_t);
}

CorrelationSplit split_correlation(DiscreteMeasure joint, DiscreteMeasure marginal_product,
                                   DiscreteMeasure classical_product) {
  DensityFunction rho_t = density(joint, marginal_product);
  CorrelationSplit s{std::move(joint), std::move(marginal_product), std::move(classical_product),
                     std::move(rho_t), std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  try {
    s.rho_c = density(s.classical_product, s.marginal_product);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kAbsoluteContinuityViolation) throw;
    s.rho_c_error = e.what();
  }
  try {
    s.rho_e = density(s.joint, s.classical_product);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kAbsoluteContinuityViolation) throw;
    s.rho_e_error = e.what();
  }
  if (s.rho_c && s.rho_e) s.product_rule_residual = product_rule_residual(s.rho_t, *s.rho_c, *s.rho_e);
  return s;
}

DiscreteMeasure classical_product_measure(const Povm& a1, const Povm& a2, const ConvexDecomposition& dec) {
  if (a1.dim() != dec.target().dim() || a2.dim() != dec.target().dim())
    throw Error(ErrorCode::kDimensionMismatch, "observables and decomposition act on different dimensions");
  std::vector<std::pair<double, DiscreteMeasure>> terms;
  terms.reserve(dec.size());
  for (const auto& c : dec.components())
    terms.emplace_back(c.weight, product(outcome_measure(a1, c.state), outcome_measure(a2, c.state)));
  return mix(terms);
}

DensityFunction total_correlation(const Povm& joint, const Povm& a1, const Povm& a2, const DensityOperator& d) {
  require_joint(joint, a1, a2);
  return density(outcome_measure(joint, d), marginal_product_at(a1, a2, d));
}

DensityFunction classical_correlation(const Povm& a1, const Povm& a2, const ConvexDecomposition& dec) {
  return density(classical_product_measure(a1, a2, dec), marginal_product_at(a1, a2, dec.target()));
}

DensityFunction entanglement(const Povm& joint, const Povm& a1, const Povm& a2, const ConvexDecomposition& dec) {
  require_joint(joint, a1, a2);
  return density(outcome_measure(joint, dec.target()), classical_product_measure(a1, a2, dec));
}

CorrelationReport correlation_report(const Povm& joint, const Povm& a1, const Povm& a2,
                                     const ConvexDecomposition& dec) {
  require_joint(joint, a1, a2);
  const auto& d = dec.target();
  return {split_correlation(outcome_measure(joint, d), marginal_product_at(a1, a2, d),
                            classical_product_measure(a1, a2, dec)),
          false};
}

CorrelationReport correlation_report(const Povm& joint, const Povm& a1, const Povm& a2, const DensityOperator& d) {
  auto report = correlation_report(joint, a1, a2, spectral_decompose(d));
  report.spectral_default = true;
  return report;
}

}  // namespace qcorr
