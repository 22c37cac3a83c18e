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

#include "qcorr/classical_frame.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr::classical {

namespace {

void require_codomain(const ClassicalJoint& jo, const ClassicalObservable& a1, const ClassicalObservable& a2) {
  if (!(jo.codomain() == OutcomeSpace::product(a1.codomain(), a2.codomain())))
    throw Error(ErrorCode::kSpaceMismatch, "joint codomain is not the product of the observables' codomains");
}

DiscreteMeasure marginal_product_at(const ClassicalObservable& a1, const ClassicalObservable& a2,
                                    const DiscreteMeasure& mu) {
  return product(apply(a1, mu), apply(a2, mu));
}

}  // namespace

ClassicalObservable::ClassicalObservable(PhaseSpace domain, OutcomeSpace codomain, std::vector<DiscreteMeasure> rows)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rows_(std::move(rows)) {
  if (rows_.size() != domain_.size())
    throw Error(ErrorCode::kValidationError, "kernel has " + std::to_string(rows_.size()) + " rows for " +
                                                 std::to_string(domain_.size()) + " phase-space points");
  for (const auto& r : rows_)
    if (!(r.space() == codomain_)) throw Error(ErrorCode::kSpaceMismatch, "kernel row is not on the codomain");
}

ClassicalObservable ClassicalObservable::from_rows(PhaseSpace domain, OutcomeSpace codomain,
                                                   const std::vector<std::vector<double>>& rows) {
  std::vector<DiscreteMeasure> measures;
  measures.reserve(rows.size());
  for (const auto& r : rows) measures.emplace_back(codomain, r);
  return ClassicalObservable(std::move(domain), std::move(codomain), std::move(measures));
}

ClassicalObservable ClassicalObservable::deterministic(PhaseSpace domain, OutcomeSpace codomain,
                                                       const std::vector<std::string>& images) {
  std::vector<DiscreteMeasure> measures;
  measures.reserve(images.size());
  for (const auto& img : images) measures.push_back(dirac(codomain, img));
  return ClassicalObservable(std::move(domain), std::move(codomain), std::move(measures));
}

DiscreteMeasure apply(const ClassicalObservable& a, const DiscreteMeasure& mu) {
  if (!(mu.space() == a.domain()))
    throw Error(ErrorCode::kSpaceMismatch, "state is not a measure on the observable's phase space");
  std::vector<double> w(a.codomain().size(), 0.0);
  for (std::size_t omega = 0; omega < a.domain().size(); ++omega) {
    const double m = mu.weight(omega);
    if (m == 0.0) continue;
    const auto& row = a.row(omega).weights();
    for (std::size_t x = 0; x < w.size(); ++x) w[x] += m * row[x];
  }
  return DiscreteMeasure(a.codomain(), std::move(w));
}

bool is_deterministic(const ClassicalObservable& a) {
  return std::all_of(a.rows().begin(), a.rows().end(), [](const DiscreteMeasure& row) {
    return std::any_of(row.weights().begin(), row.weights().end(), [](double w) { return w >= 1.0 - kEps; });
  });
}

ClassicalJoint classical_joint(const ClassicalObservable& a1, const ClassicalObservable& a2) {
  if (!(a1.domain() == a2.domain()))
    throw Error(ErrorCode::kSpaceMismatch, "observables live on different phase spaces");
  std::vector<DiscreteMeasure> rows;
  rows.reserve(a1.domain().size());
  for (std::size_t omega = 0; omega < a1.domain().size(); ++omega) rows.push_back(product(a1.row(omega), a2.row(omega)));
  return ClassicalJoint(a1.domain(), OutcomeSpace::product(a1.codomain(), a2.codomain()), std::move(rows));
}

bool marginally_consistent(const ClassicalJoint& jo, const ClassicalObservable& a1, const ClassicalObservable& a2) {
  if (!(jo.domain() == a1.domain()) || !(jo.domain() == a2.domain())) return false;
  if (!(jo.codomain() == OutcomeSpace::product(a1.codomain(), a2.codomain()))) return false;
  for (std::size_t omega = 0; omega < jo.domain().size(); ++omega) {
    if (marginal(jo.row(omega), Side::kLeft).max_abs_diff(a1.row(omega)) > kEps) return false;
    if (marginal(jo.row(omega), Side::kRight).max_abs_diff(a2.row(omega)) > kEps) return false;
  }
  return true;
}

DensityFunction classical_rho_t(const ClassicalJoint& jo, const ClassicalObservable& a1,
                                const ClassicalObservable& a2, const DiscreteMeasure& mu) {
  require_codomain(jo, a1, a2);
  return density(apply(jo, mu), marginal_product_at(a1, a2, mu));
}

DensityFunction classical_rho_c(const ClassicalObservable& a1, const ClassicalObservable& a2,
                                const DiscreteMeasure& mu) {
  return density(apply(classical_joint(a1, a2), mu), marginal_product_at(a1, a2, mu));
}

DensityFunction classical_rho_e(const ClassicalJoint& jo, const ClassicalObservable& a1,
                                const ClassicalObservable& a2, const DiscreteMeasure& mu) {
  require_codomain(jo, a1, a2);
  return density(apply(jo, mu), apply(classical_joint(a1, a2), mu));
}

CorrelationSplit classical_split(const ClassicalJoint& jo, const ClassicalObservable& a1,
                                 const ClassicalObservable& a2, const DiscreteMeasure& mu) {
  require_codomain(jo, a1, a2);
  return split_correlation(apply(jo, mu), marginal_product_at(a1, a2, mu), apply(classical_joint(a1, a2), mu));
}

}  // namespace qcorr::classical
