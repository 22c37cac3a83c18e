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

// Probability measures on finite labeled outcome spaces and their
// pointwise (Radon-Nikodym) densities.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcorr {

enum class Side { kLeft, kRight };

/// Ordered, finite set of distinct string labels. A product space keeps its
/// two factors; its points are the pairs in row-major order and are labeled
/// "(left,right)".
class OutcomeSpace {
 public:
  /// Throws ValidationError on an empty list or duplicate labels.
  explicit OutcomeSpace(std::vector<std::string> labels);
  static OutcomeSpace product(const OutcomeSpace& left, const OutcomeSpace& right);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  bool is_product() const noexcept { return factors_ != nullptr; }
  /// Throw NotAProductSpace on simple spaces.
  const OutcomeSpace& left() const;
  const OutcomeSpace& right() const;
  const OutcomeSpace& factor(Side side) const { return side == Side::kLeft ? left() : right(); }
  std::size_t point_index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> split(std::size_t point) const;

  friend bool operator==(const OutcomeSpace& a, const OutcomeSpace& b);

 private:
  std::vector<std::string> labels_;
  std::shared_ptr<const std::pair<OutcomeSpace, OutcomeSpace>> factors_;
};

std::string pair_label(const std::string& left, const std::string& right);

/// Probability measure: weights indexed like the space's labels.
class DiscreteMeasure {
 public:
  /// Throws ValidationError for negative weights or a size mismatch and
  /// WeightSumInvalid when the weights do not sum to one.
  DiscreteMeasure(OutcomeSpace space, std::vector<double> weights);

  const OutcomeSpace& space() const noexcept { return space_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double weight(std::size_t i) const { return weights_.at(i); }
  double weight(const std::string& label) const { return weights_[space_.index_of(label)]; }
  double max_abs_diff(const DiscreteMeasure& other) const;

 private:
  OutcomeSpace space_;
  std::vector<double> weights_;
};

DiscreteMeasure dirac(const OutcomeSpace& space, const std::string& label);
DiscreteMeasure uniform(const OutcomeSpace& space);
DiscreteMeasure product(const DiscreteMeasure& left, const DiscreteMeasure& right);
DiscreteMeasure marginal(const DiscreteMeasure& nu, Side side);
/// Convex combination. Throws WeightSumInvalid or SpaceMismatch.
DiscreteMeasure mix(const std::vector<std::pair<double, DiscreteMeasure>>& components);

/// Quotient of two measures, defined on the denominator's support
/// {x : den(x) > kEps}. Off-support points hold no value.
class DensityFunction {
 public:
  DensityFunction(OutcomeSpace space, std::vector<std::optional<double>> values);

  const OutcomeSpace& space() const noexcept { return space_; }
  const std::vector<std::optional<double>>& values() const noexcept { return values_; }
  std::optional<double> at(std::size_t i) const { return values_.at(i); }
  std::optional<double> at(const std::string& label) const { return values_[space_.index_of(label)]; }
  bool in_support(std::size_t i) const { return values_.at(i).has_value(); }
  std::vector<std::size_t> support() const;

  /// True when every supported value is within tol of 1.
  bool is_constant_one(double tol) const;
  /// Largest |this - other| over the common support.
  double max_abs_diff(const DensityFunction& other) const;

 private:
  OutcomeSpace space_;
  std::vector<std::optional<double>> values_;
};

/// d num / d den. Throws SpaceMismatch, or AbsoluteContinuityViolation when
/// num carries mass above kEps where den does not.
DensityFunction density(const DiscreteMeasure& num, const DiscreteMeasure& den);
/// Pointwise product on the intersection of supports.
DensityFunction density_product(const DensityFunction& a, const DensityFunction& b);
/// Recovers the numerator measure's weight on a subset of points:
/// sum over support of values(x) * den(x).
double integrate(const DensityFunction& rho, const DiscreteMeasure& den, const std::vector<std::size_t>& points);

}  // namespace qcorr
