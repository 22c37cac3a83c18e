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

// Brute-force reference computations for the tests. Everything here goes
// through Eigen and plain arrays, never through the library's own linear
// algebra or density code.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/hilbert.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Values = std::vector<std::optional<double>>;

inline Mat to_eigen(const qcorr::ComplexMatrix& m) {
  Mat out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  return out;
}

inline Vec to_eigen(const std::vector<std::complex<double>>& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i];
  return out;
}

inline qcorr::ComplexMatrix from_eigen(const Mat& m) {
  std::vector<std::complex<double>> entries;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(m(r, c));
  return qcorr::ComplexMatrix(static_cast<std::size_t>(m.rows()), std::move(entries));
}

inline std::vector<std::complex<double>> from_eigen(const Vec& v) { return {v.data(), v.data() + v.size()}; }

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat proj(const Vec& v) { return v * v.adjoint(); }

// Single-qubit basics.
inline Vec ket(std::complex<double> a, std::complex<double> b) {
  Vec v(2);
  v << a, b;
  return v / v.norm();
}
inline Mat p_up() { return proj(ket(1, 0)); }
inline Mat p_down() { return proj(ket(0, 1)); }
inline Mat p_x() { return proj(ket(1, 1)); }
inline Mat id2() { return Mat::Identity(2, 2); }

// Spin-z effects in row-major outcome order (++, +-, -+, --).
inline std::vector<Mat> spin_z_joint() {
  return {kron(p_up(), p_up()), kron(p_up(), p_down()), kron(p_down(), p_up()), kron(p_down(), p_down())};
}
inline std::vector<Mat> spin_z_left() { return {kron(p_up(), id2()), kron(p_down(), id2())}; }
inline std::vector<Mat> spin_z_right() { return {kron(id2(), p_up()), kron(id2(), p_down())}; }

inline std::vector<double> probs(const std::vector<Mat>& effects, const Mat& rho) {
  std::vector<double> out;
  for (const auto& e : effects) out.push_back((e * rho).trace().real());
  return out;
}

inline std::vector<double> outer_product(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  for (double x : a)
    for (double y : b) out.push_back(x * y);
  return out;
}

inline Values quotient(const std::vector<double>& num, const std::vector<double>& den) {
  Values out;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (den[i] > 1e-9) {
      out.push_back(num[i] / den[i]);
    } else {
      out.push_back(std::nullopt);
    }
  }
  return out;
}

struct Split {
  std::vector<double> joint, marginal_product, classical_product;
  Values rho_t, rho_c, rho_e;
};

using Decomposition = std::vector<std::pair<double, Vec>>;

inline Split split(const std::vector<Mat>& joint, const std::vector<Mat>& left, const std::vector<Mat>& right,
                   const Decomposition& dec) {
  Mat rho = Mat::Zero(joint.front().rows(), joint.front().cols());
  for (const auto& [w, v] : dec) rho += w * proj(v);
  Split s;
  s.joint = probs(joint, rho);
  s.marginal_product = outer_product(probs(left, rho), probs(right, rho));
  s.classical_product.assign(s.joint.size(), 0.0);
  for (const auto& [w, v] : dec) {
    auto p = outer_product(probs(left, proj(v)), probs(right, proj(v)));
    for (std::size_t i = 0; i < p.size(); ++i) s.classical_product[i] += w * p[i];
  }
  s.rho_t = quotient(s.joint, s.marginal_product);
  s.rho_c = quotient(s.classical_product, s.marginal_product);
  s.rho_e = quotient(s.joint, s.classical_product);
  return s;
}

// Two-qubit product basis and Bell vectors, built by hand.
inline Vec basis4(int k) {
  Vec v = Vec::Zero(4);
  v(k) = 1.0;
  return v;
}
inline Vec bell4(int index) {
  const double s = 1.0 / std::sqrt(2.0);
  Vec v = Vec::Zero(4);
  switch (index) {
    case 1: v(0) = s; v(3) = s; break;
    case 2: v(0) = s; v(3) = -s; break;
    case 3: v(1) = s; v(2) = s; break;
    default: v(1) = s; v(2) = -s; break;
  }
  return v;
}

// Named points of the spin-z product space. Tests look values up by name so
// they never depend on a particular tuple order.
inline const std::string kPP = "(+1/2,+1/2)";
inline const std::string kPM = "(+1/2,-1/2)";
inline const std::string kMP = "(-1/2,+1/2)";
inline const std::string kMM = "(-1/2,-1/2)";

}  // namespace oracle
