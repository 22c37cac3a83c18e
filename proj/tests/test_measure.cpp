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

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measure.hpp"

namespace qcorr {
namespace {

using oracle::kMM;
using oracle::kMP;
using oracle::kPM;
using oracle::kPP;

constexpr double kTol = 1e-9;

const OutcomeSpace& spin() {
  static const OutcomeSpace s({"+1/2", "-1/2"});
  return s;
}

const OutcomeSpace& spin2() {
  static const OutcomeSpace s = OutcomeSpace::product(spin(), spin());
  return s;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kValidationError;
}

TEST(OutcomeSpace, Invariants) {
  EXPECT_EQ(code_of([] { OutcomeSpace({}); }), ErrorCode::kValidationError);
  EXPECT_EQ(code_of([] { OutcomeSpace({"a", "a"}); }), ErrorCode::kValidationError);
  EXPECT_EQ(code_of([] { spin().left(); }), ErrorCode::kNotAProductSpace);
  EXPECT_EQ(code_of([] { spin().index_of("0"); }), ErrorCode::kUnknownLabel);
}

TEST(OutcomeSpace, ProductIsRowMajor) {
  const auto& p = spin2();
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p.label(0), kPP);
  EXPECT_EQ(p.label(1), kPM);
  EXPECT_EQ(p.label(2), kMP);
  EXPECT_EQ(p.label(3), kMM);
  EXPECT_EQ(p.point_index(1, 0), 2u);
  EXPECT_EQ(p.split(1), std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(DiscreteMeasure, Invariants) {
  EXPECT_EQ(code_of([] { DiscreteMeasure(spin(), {0.5, 0.4}); }), ErrorCode::kWeightSumInvalid);
  EXPECT_EQ(code_of([] { DiscreteMeasure(spin(), {1.5, -0.5}); }), ErrorCode::kValidationError);
  EXPECT_EQ(code_of([] { DiscreteMeasure(spin(), {1.0}); }), ErrorCode::kValidationError);
}

TEST(Dirac, Basics) {
  const auto eta = dirac(spin(), "+1/2");
  EXPECT_EQ(eta.weight("+1/2"), 1.0);
  EXPECT_EQ(eta.weight("-1/2"), 0.0);
  EXPECT_EQ(code_of([] { dirac(spin(), "0"); }), ErrorCode::kUnknownLabel);

  const auto both = dirac(spin2(), kPP);
  EXPECT_LT(marginal(both, Side::kLeft).max_abs_diff(eta), kTol);
  EXPECT_LT(marginal(both, Side::kRight).max_abs_diff(eta), kTol);

  EXPECT_LT(product(eta, dirac(spin(), "-1/2")).max_abs_diff(dirac(spin2(), kPM)), kTol);
  EXPECT_LT(marginal(dirac(spin2(), kMP), Side::kRight).max_abs_diff(eta), kTol);
}

TEST(Product, SeparableMarginalProduct) {
  const double w1 = 0.4, w2 = 0.3, w3 = 0.2, w4 = 0.1;
  const DiscreteMeasure a1(spin(), {w1 + w3, w2 + w4});
  const DiscreteMeasure a2(spin(), {w1 + w4, w2 + w3});
  const auto p = product(a1, a2);
  EXPECT_NEAR(p.weight(kPP), (w1 + w3) * (w1 + w4), kTol);
  EXPECT_NEAR(p.weight(kMM), (w2 + w4) * (w2 + w3), kTol);
}

TEST(Product, UniformAndDirac) {
  const auto u = product(uniform(spin()), uniform(spin()));
  for (double w : u.weights()) EXPECT_NEAR(w, 0.25, kTol);

  const DiscreteMeasure nu(spin(), {0.3, 0.7});
  const auto p = product(dirac(spin(), "+1/2"), nu);
  EXPECT_NEAR(p.weight(kPP), 0.3, kTol);
  EXPECT_NEAR(p.weight(kPM), 0.7, kTol);
  EXPECT_EQ(p.weight(kMP), 0.0);
  EXPECT_EQ(p.weight(kMM), 0.0);
}

TEST(Marginal, ProductMarginalIdentity) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const double x = u(rng);
    const OutcomeSpace three({"a", "b", "c"});
    const double y = u(rng), z = u(rng), s = y + z + 0.1;
    const DiscreteMeasure m1(spin(), {x, 1.0 - x});
    const DiscreteMeasure m2(three, {y / s, z / s, 0.1 / s});
    const auto p = product(m1, m2);
    EXPECT_LT(marginal(p, Side::kLeft).max_abs_diff(m1), kTol);
    EXPECT_LT(marginal(p, Side::kRight).max_abs_diff(m2), kTol);
  }
}

TEST(Marginal, SeparableJointLeft) {
  const double w1 = 0.4, w2 = 0.3, w3 = 0.2, w4 = 0.1;
  const auto j = mix({{w1, dirac(spin2(), kPP)}, {w2, dirac(spin2(), kMM)}, {w3, dirac(spin2(), kPM)},
                      {w4, dirac(spin2(), kMP)}});
  const auto left = marginal(j, Side::kLeft);
  EXPECT_NEAR(left.weight("+1/2"), w1 + w3, kTol);
  EXPECT_NEAR(left.weight("-1/2"), w2 + w4, kTol);
  EXPECT_EQ(code_of([] { marginal(uniform(spin()), Side::kLeft); }), ErrorCode::kNotAProductSpace);
}

TEST(Mix, Basics) {
  const DiscreteMeasure nu(spin(), {0.3, 0.7});
  EXPECT_LT(mix({{1.0, nu}}).max_abs_diff(nu), kTol);

  const auto bell = mix({{0.5, dirac(spin2(), kPP)}, {0.5, dirac(spin2(), kMM)}});
  EXPECT_NEAR(bell.weight(kPP), 0.5, kTol);
  EXPECT_NEAR(bell.weight(kMM), 0.5, kTol);
  EXPECT_EQ(bell.weight(kPM), 0.0);

  EXPECT_EQ(code_of([&] { mix({{0.5, nu}, {0.4, nu}}); }), ErrorCode::kWeightSumInvalid);
  EXPECT_EQ(code_of([&] { mix({{0.5, nu}, {0.5, uniform(spin2())}}); }), ErrorCode::kSpaceMismatch);
}

TEST(Mix, MarginalIsLinear) {
  const DiscreteMeasure a(spin2(), {0.1, 0.2, 0.3, 0.4});
  const DiscreteMeasure b(spin2(), {0.4, 0.4, 0.1, 0.1});
  const auto lhs = marginal(mix({{0.25, a}, {0.75, b}}), Side::kLeft);
  const auto rhs = mix({{0.25, marginal(a, Side::kLeft)}, {0.75, marginal(b, Side::kLeft)}});
  EXPECT_LT(lhs.max_abs_diff(rhs), kTol);
}

TEST(Density, IdentityIsOne) {
  const DiscreteMeasure nu(spin2(), {0.1, 0.0, 0.5, 0.4});
  const auto rho = density(nu, nu);
  EXPECT_TRUE(rho.is_constant_one(kTol));
  EXPECT_FALSE(rho.in_support(1));
}

TEST(Density, SeparableTotalCorrelation) {
  const double w1 = 0.4, w2 = 0.3, w3 = 0.2, w4 = 0.1;
  const auto j = mix({{w1, dirac(spin2(), kPP)}, {w2, dirac(spin2(), kMM)}, {w3, dirac(spin2(), kPM)},
                      {w4, dirac(spin2(), kMP)}});
  const auto rho = density(j, product(marginal(j, Side::kLeft), marginal(j, Side::kRight)));
  EXPECT_NEAR(*rho.at(kPP), w1 / ((w1 + w3) * (w1 + w4)), kTol);
}

TEST(Density, ConcentratedCase) {
  const auto eta = dirac(spin2(), kPP);
  const auto rho = density(eta, eta);
  EXPECT_EQ(rho.support(), std::vector<std::size_t>{0});
  EXPECT_NEAR(*rho.at(kPP), 1.0, kTol);
  EXPECT_FALSE(rho.at(kMM).has_value());
}

TEST(Density, AbsoluteContinuityViolation) {
  EXPECT_EQ(code_of([] { density(uniform(spin2()), dirac(spin2(), kPP)); }),
            ErrorCode::kAbsoluteContinuityViolation);
  EXPECT_EQ(code_of([] { density(uniform(spin2()), uniform(spin())); }), ErrorCode::kSpaceMismatch);
}

TEST(Density, ReconstructionOnEverySubset) {
  const DiscreteMeasure num(spin2(), {0.1, 0.0, 0.5, 0.4});
  const DiscreteMeasure den(spin2(), {0.2, 0.3, 0.25, 0.25});
  const auto rho = density(num, den);
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> pts;
    double expected = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      if (mask & (1u << i)) {
        pts.push_back(i);
        expected += num.weight(i);
      }
    EXPECT_NEAR(integrate(rho, den, pts), expected, kTol);
  }
}

TEST(Density, ProductOfMarginalsIffConstantOne) {
  const DiscreteMeasure m1(spin(), {0.3, 0.7});
  const DiscreteMeasure m2(spin(), {0.6, 0.4});
  const auto p = product(m1, m2);
  EXPECT_TRUE(density(p, product(marginal(p, Side::kLeft), marginal(p, Side::kRight))).is_constant_one(kTol));
  const DiscreteMeasure corr(spin2(), {0.5, 0.0, 0.0, 0.5});
  EXPECT_FALSE(density(corr, product(marginal(corr, Side::kLeft), marginal(corr, Side::kRight))).is_constant_one(kTol));
}

TEST(DensityProduct, DegenerateMixedCompensation) {
  // rho_c and rho_e of the degenerate example under the mixed decomposition,
  // written out from the closed forms.
  for (auto [a, b] : {std::pair{0.25, 0.25}, std::pair{0.3, 0.2}}) {
    const DensityFunction rho_c(spin2(), {2 * (2 * a + b), 2 * b, 2 * b, 2 * (2 * a + b)});
    const DensityFunction rho_e(spin2(), {2 * a / (2 * a + b), 2.0, 2.0, 2 * a / (2 * a + b)});
    const auto t = density_product(rho_c, rho_e);
    EXPECT_NEAR(*t.at(kPP), 4 * a, kTol);
    EXPECT_NEAR(*t.at(kPM), 4 * b, kTol);
  }
}

TEST(DensityProduct, SupportIsIntersectionAndOneIsNeutral) {
  const DensityFunction a(spin2(), {2.0, std::nullopt, 0.5, 1.0});
  const DensityFunction b(spin2(), {1.0, 1.0, std::nullopt, 1.0});
  const auto ab = density_product(a, b);
  EXPECT_EQ(ab.support(), (std::vector<std::size_t>{0, 3}));
  const DensityFunction one(spin2(), {1.0, 1.0, 1.0, 1.0});
  const auto a1 = density_product(a, one);
  EXPECT_EQ(a1.values(), a.values());
  EXPECT_EQ(code_of([&] { density_product(a, DensityFunction(spin(), {1.0, 1.0})); }), ErrorCode::kSpaceMismatch);
}

}  // namespace
}  // namespace qcorr
