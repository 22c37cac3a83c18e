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

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/hilbert.hpp"
#include "qcorr/qubit.hpp"

namespace qcorr {
namespace {

constexpr double kTol = 1e-9;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kValidationError;
}

ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = g(rng);
    for (std::size_t c = r + 1; c < dim; ++c) {
      m(r, c) = {g(rng), g(rng)};
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

TEST(Tensor, ProjectorsTensorToProjectorOfProduct) {
  const auto up = qubit::up();
  const auto pp = tensor(up.projector(), up.projector());
  EXPECT_LT(pp.max_abs_diff(tensor(up, up).projector()), kTol);
  EXPECT_TRUE(oracle::to_eigen(pp).isApprox(oracle::kron(oracle::p_up(), oracle::p_up())));
  EXPECT_DOUBLE_EQ(pp(0, 0).real(), 1.0);
}

TEST(Tensor, IdentityAndScalars) {
  EXPECT_EQ(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
  const auto half = ComplexMatrix::identity(2) * Complex(0.5);
  EXPECT_LT(tensor(half, half).max_abs_diff(ComplexMatrix::identity(4) * Complex(0.25)), kTol);
}

TEST(Tensor, MatchesEigenKroneckerAndTraceRule) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_hermitian(2, rng);
    const auto b = random_hermitian(3, rng);
    const auto ab = tensor(a, b);
    EXPECT_LT((oracle::to_eigen(ab) - oracle::kron(oracle::to_eigen(a), oracle::to_eigen(b))).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_NEAR(std::abs(ab.trace() - a.trace() * b.trace()), 0.0, kTol);
    const auto c = random_hermitian(2, rng);
    EXPECT_LT(tensor(tensor(a, b), c).max_abs_diff(tensor(a, tensor(b, c))), 1e-12);
  }
}

TEST(PureState, RejectsNonUnitVector) {
  EXPECT_EQ(code_of([] { PureState({1.0, 1.0}); }), ErrorCode::kInvalidState);
  EXPECT_NO_THROW(PureState::normalized({1.0, 1.0}));
}

TEST(DensityOperator, Invariants) {
  EXPECT_EQ(code_of([] { DensityOperator(ComplexMatrix{{0.5, 0.1}, {0.2, 0.5}}); }), ErrorCode::kNonHermitianInput);
  EXPECT_EQ(code_of([] { DensityOperator(ComplexMatrix{{0.5, 0.0}, {0.0, 0.4}}); }), ErrorCode::kInvalidState);
  // Trace one but an eigenvalue of -0.2.
  EXPECT_EQ(code_of([] { DensityOperator(ComplexMatrix{{1.2, 0.0}, {0.0, -0.2}}); }), ErrorCode::kInvalidState);
  EXPECT_NO_THROW(DensityOperator(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}));
}

TEST(Expectation, PaperValues) {
  const auto pp = qubit::product(qubit::up(), qubit::up());
  const auto mm = qubit::product(qubit::down(), qubit::down());
  const auto p_plus_i = tensor(qubit::up().projector(), ComplexMatrix::identity(2));
  EXPECT_NEAR(expectation(pp.projector(), DensityOperator::from_pure(pp)), 1.0, kTol);
  EXPECT_NEAR(expectation(p_plus_i, DensityOperator::from_pure(pp)), 1.0, kTol);
  EXPECT_NEAR(expectation(p_plus_i, DensityOperator::from_pure(mm)), 0.0, kTol);
  EXPECT_NEAR(expectation(qubit::up().projector(), DensityOperator::from_pure(qubit::x_up())), 0.5, kTol);
}

TEST(Expectation, Errors) {
  const auto d = DensityOperator::from_pure(qubit::up());
  EXPECT_EQ(code_of([&] { expectation(ComplexMatrix::identity(4), d); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { expectation(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, d); }), ErrorCode::kNonHermitianInput);
}

TEST(Expectation, LinearInState) {
  std::mt19937_64 rng(5);
  const auto e = tensor(qubit::x_up().projector(), ComplexMatrix::identity(2));
  const std::vector<double> w = {0.2, 0.5, 0.3};
  std::vector<DensityOperator> ds;
  for (int k = 0; k < 3; ++k) ds.push_back(DensityOperator::from_pure(PureState::normalized(
                                   {Complex(k + 1, 0.3), Complex(0.1, -k), Complex(0.7, 0.2 * k), 1.0})));
  ComplexMatrix mixed(4);
  double expected = 0.0;
  for (int k = 0; k < 3; ++k) {
    mixed += ds[k].matrix() * Complex(w[k]);
    expected += w[k] * expectation(e, ds[k]);
  }
  EXPECT_NEAR(expectation(e, DensityOperator(mixed)), expected, kTol);
}

TEST(Eigen, JacobiMatchesEigenOracle) {
  std::mt19937_64 rng(3);
  for (std::size_t dim : {1u, 2u, 3u, 4u, 8u, 16u}) {
    for (int t = 0; t < 5; ++t) {
      const auto h = random_hermitian(dim, rng);
      const auto ours = eigen_hermitian(h);
      Eigen::SelfAdjointEigenSolver<oracle::Mat> ref(oracle::to_eigen(h));
      ASSERT_EQ(ours.values.size(), dim);
      for (std::size_t k = 0; k < dim; ++k) EXPECT_NEAR(ours.values[k], ref.eigenvalues()(k), 1e-9);
      for (std::size_t k = 0; k < dim; ++k) {
        const auto hv = h.apply(ours.vectors[k]);
        for (std::size_t i = 0; i < dim; ++i) EXPECT_LT(std::abs(hv[i] - ours.values[k] * ours.vectors[k][i]), 1e-8);
      }
    }
  }
}

TEST(Spectral, DiagonalState) {
  const auto d = DensityOperator(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}});
  const auto dec = spectral_decompose(d);
  ASSERT_EQ(dec.size(), 2u);
  EXPECT_NEAR(dec.components()[0].weight, 0.5, kTol);
  EXPECT_NEAR(dec.components()[1].weight, 0.5, kTol);
}

TEST(Spectral, RankOne) {
  const auto dec = spectral_decompose(DensityOperator::from_pure(qubit::bell(3)));
  ASSERT_EQ(dec.size(), 1u);
  EXPECT_NEAR(dec.components()[0].weight, 1.0, kTol);
}

TEST(Spectral, DegenerateStateEigenvaluesAndReconstruction) {
  const double a = 0.3, b = 0.2;
  oracle::Mat dd = a * oracle::proj(oracle::basis4(0)) + a * oracle::proj(oracle::basis4(3)) +
                   b * oracle::proj(oracle::basis4(1)) + b * oracle::proj(oracle::basis4(2));
  const auto dec = spectral_decompose(DensityOperator(oracle::from_eigen(dd)));
  ASSERT_EQ(dec.size(), 4u);
  const std::vector<double> expected = {0.3, 0.3, 0.2, 0.2};
  oracle::Mat sum = oracle::Mat::Zero(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(dec.components()[k].weight, expected[k], kTol);
    sum += dec.components()[k].weight * oracle::proj(oracle::to_eigen(dec.components()[k].state.vector()));
  }
  EXPECT_LT((sum - dd).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Spectral, RandomHermitianReconstruction) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const std::size_t dim = 2 + t % 7;
    const auto h = random_hermitian(dim, rng);
    const auto eig = eigen_hermitian(h);
    oracle::Mat sum = oracle::Mat::Zero(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) sum += eig.values[k] * oracle::proj(oracle::to_eigen(eig.vectors[k]));
    EXPECT_LT((sum - oracle::to_eigen(h)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Spectral, WeightsDescendingAndZerosOmitted) {
  const auto d = DensityOperator(ComplexMatrix::diagonal(std::vector<double>{0.1, 0.0, 0.6, 0.3}));
  const auto dec = spectral_decompose(d);
  ASSERT_EQ(dec.size(), 3u);
  EXPECT_TRUE(std::is_sorted(dec.components().begin(), dec.components().end(),
                             [](const auto& x, const auto& y) { return x.weight > y.weight; }));
}

TEST(ConvexDecomposition, Invariants) {
  const auto d = DensityOperator(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}});
  EXPECT_NO_THROW(ConvexDecomposition({{0.5, qubit::x_up()}, {0.5, qubit::x_down()}}, d));
  EXPECT_EQ(code_of([&] { ConvexDecomposition({{0.5, qubit::up()}, {0.4, qubit::down()}}, d); }),
            ErrorCode::kWeightSumInvalid);
  // Weights fine, states realize a different operator.
  EXPECT_EQ(code_of([&] { ConvexDecomposition({{0.5, qubit::up()}, {0.5, qubit::x_up()}}, d); }),
            ErrorCode::kValidationError);
}

}  // namespace
}  // namespace qcorr
