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

#include "qcorr/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr {

namespace {

void require_same_space(const OutcomeSpace& a, const OutcomeSpace& b, const char* what) {
  if (!(a == b)) throw Error(ErrorCode::kSpaceMismatch, std::string(what) + ": outcome spaces differ");
}

}  // namespace

std::string pair_label(const std::string& left, const std::string& right) {
  return "(" + left + "," + right + ")";
}

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::kValidationError, "outcome space is empty");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorCode::kValidationError, "duplicate outcome label '" + l + "'");
}

OutcomeSpace OutcomeSpace::product(const OutcomeSpace& left, const OutcomeSpace& right) {
  std::vector<std::string> labels;
  labels.reserve(left.size() * right.size());
  for (const auto& a : left.labels())
    for (const auto& b : right.labels()) labels.push_back(pair_label(a, b));
  OutcomeSpace s(std::move(labels));
  s.factors_ = std::make_shared<const std::pair<OutcomeSpace, OutcomeSpace>>(left, right);
  return s;
}

std::size_t OutcomeSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::kUnknownLabel, "unknown outcome label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool OutcomeSpace::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

const OutcomeSpace& OutcomeSpace::left() const {
  if (!factors_) throw Error(ErrorCode::kNotAProductSpace, "outcome space is not a product space");
  return factors_->first;
}

const OutcomeSpace& OutcomeSpace::right() const {
  if (!factors_) throw Error(ErrorCode::kNotAProductSpace, "outcome space is not a product space");
  return factors_->second;
}

std::size_t OutcomeSpace::point_index(std::size_t i, std::size_t j) const { return i * right().size() + j; }

std::pair<std::size_t, std::size_t> OutcomeSpace::split(std::size_t point) const {
  const std::size_t n = right().size();
  return {point / n, point % n};
}

bool operator==(const OutcomeSpace& a, const OutcomeSpace& b) {
  if (a.labels_ != b.labels_ || a.is_product() != b.is_product()) return false;
  if (!a.is_product() || a.factors_ == b.factors_) return true;
  return a.factors_->first == b.factors_->first && a.factors_->second == b.factors_->second;
}

// ---------------------------------------------------------------------------

DiscreteMeasure::DiscreteMeasure(OutcomeSpace space, std::vector<double> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size())
    throw Error(ErrorCode::kValidationError, "measure has " + std::to_string(weights_.size()) +
                                                 " weights for " + std::to_string(space_.size()) + " outcomes");
  const double tol = validation_eps();
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || weights_[i] < -tol) {
      std::ostringstream os;
      os << "measure weight at '" << space_.label(i) << "' is " << weights_[i];
      throw Error(ErrorCode::kValidationError, os.str());
    }
    sum += weights_[i];
  }
  if (std::abs(sum - 1.0) > tol) {
    std::ostringstream os;
    os << "weights sum to " << sum;
    throw Error(ErrorCode::kWeightSumInvalid, os.str());
  }
}

double DiscreteMeasure::max_abs_diff(const DiscreteMeasure& other) const {
  require_same_space(space_, other.space_, "measure comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) m = std::max(m, std::abs(weights_[i] - other.weights_[i]));
  return m;
}

DiscreteMeasure dirac(const OutcomeSpace& space, const std::string& label) {
  std::vector<double> w(space.size(), 0.0);
  w[space.index_of(label)] = 1.0;
  return DiscreteMeasure(space, std::move(w));
}

DiscreteMeasure uniform(const OutcomeSpace& space) {
  return DiscreteMeasure(space, std::vector<double>(space.size(), 1.0 / static_cast<double>(space.size())));
}

DiscreteMeasure product(const DiscreteMeasure& left, const DiscreteMeasure& right) {
  auto space = OutcomeSpace::product(left.space(), right.space());
  std::vector<double> w;
  w.reserve(space.size());
  for (double a : left.weights())
    for (double b : right.weights()) w.push_back(a * b);
  return DiscreteMeasure(std::move(space), std::move(w));
}

DiscreteMeasure marginal(const DiscreteMeasure& nu, Side side) {
  const auto& space = nu.space();
  const auto& target = space.factor(side);
  std::vector<double> w(target.size(), 0.0);
  for (std::size_t p = 0; p < space.size(); ++p) {
    auto [i, j] = space.split(p);
    w[side == Side::kLeft ? i : j] += nu.weight(p);
  }
  return DiscreteMeasure(target, std::move(w));
}

DiscreteMeasure mix(const std::vector<std::pair<double, DiscreteMeasure>>& components) {
  if (components.empty()) throw Error(ErrorCode::kWeightSumInvalid, "mixture has no components");
  const auto& space = components.front().second.space();
  double total = 0.0;
  std::vector<double> w(space.size(), 0.0);
  for (const auto& [weight, nu] : components) {
    if (!(weight >= 0.0)) throw Error(ErrorCode::kWeightSumInvalid, "mixture weight is negative");
    require_same_space(space, nu.space(), "mix");
    total += weight;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += weight * nu.weight(i);
  }
  if (std::abs(total - 1.0) > validation_eps()) {
    std::ostringstream os;
    os << "weights sum to " << total;
    throw Error(ErrorCode::kWeightSumInvalid, os.str());
  }
  return DiscreteMeasure(space, std::move(w));
}

// ---------------------------------------------------------------------------

DensityFunction::DensityFunction(OutcomeSpace space, std::vector<std::optional<double>> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size())
    throw Error(ErrorCode::kValidationError, "density function size does not match its space");
}

std::vector<std::size_t> DensityFunction::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i]) s.push_back(i);
  return s;
}

bool DensityFunction::is_constant_one(double tol) const {
  return std::all_of(values_.begin(), values_.end(),
                     [tol](const std::optional<double>& v) { return !v || std::abs(*v - 1.0) <= tol; });
}

double DensityFunction::max_abs_diff(const DensityFunction& other) const {
  require_same_space(space_, other.space_, "density comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] && other.values_[i]) m = std::max(m, std::abs(*values_[i] - *other.values_[i]));
  return m;
}

DensityFunction density(const DiscreteMeasure& num, const DiscreteMeasure& den) {
  require_same_space(num.space(), den.space(), "density");
  std::vector<std::optional<double>> values(den.space().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = den.weight(i), n = num.weight(i);
    if (d > kEps) {
      values[i] = std::max(n, 0.0) / d;
    } else if (n > kEps) {
      std::ostringstream os;
      os << "numerator has mass " << n << " at '" << den.space().label(i)
         << "' where the reference measure vanishes (" << d << ")";
      throw Error(ErrorCode::kAbsoluteContinuityViolation, os.str());
    }
  }
  return DensityFunction(den.space(), std::move(values));
}

DensityFunction density_product(const DensityFunction& a, const DensityFunction& b) {
  require_same_space(a.space(), b.space(), "density product");
  std::vector<std::optional<double>> values(a.space().size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (a.at(i) && b.at(i)) values[i] = *a.at(i) * *b.at(i);
  return DensityFunction(a.space(), std::move(values));
}

double integrate(const DensityFunction& rho, const DiscreteMeasure& den, const std::vector<std::size_t>& points) {
  require_same_space(rho.space(), den.space(), "integrate");
  double s = 0.0;
  for (std::size_t p : points)
    if (auto v = rho.at(p)) s += *v * den.weight(p);
  return s;
}

}  // namespace qcorr
