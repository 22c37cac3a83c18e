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

#include "qcorr/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/tolerance.hpp"

namespace qcorr {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension " << a << " vs " << b;
    throw Error(ErrorCode::kDimensionMismatch, os.str());
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim_ == 0 || data_.size() != dim_ * dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix needs " + std::to_string(dim_ * dim_) + " entries, got " +
                    std::to_string(data_.size()));
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw Error(ErrorCode::kValidationError, "matrix has non-finite entries");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& r : rows) {
    if (r.size() != dim_) throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  require_same_dim(ket.size(), bra.size(), "outer product");
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> v) const {
  require_same_dim(dim_, v.size(), "matrix-vector product");
  ComplexVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(dim_, other.dim_, "matrix comparison");
  double m = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) m = std::max(m, std::abs(data_[k] - other.data_[k]));
  return m;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix product");
  const std::size_t n = a.dim_;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix m(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return m;
}

ComplexVector tensor(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector v;
  v.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) v.push_back(x * y);
  return v;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  require_same_dim(a.size(), b.size(), "inner product");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------

PureState::PureState(ComplexVector v) : vector_(std::move(v)) {
  if (vector_.empty()) throw Error(ErrorCode::kInvalidState, "pure state has no components");
  if (!std::all_of(vector_.begin(), vector_.end(), finite))
    throw Error(ErrorCode::kInvalidState, "pure state has non-finite components");
  const double n = norm(vector_);
  if (std::abs(n - 1.0) > validation_eps()) {
    std::ostringstream os;
    os << "pure state norm is " << n << ", expected 1";
    throw Error(ErrorCode::kInvalidState, os.str());
  }
}

PureState PureState::normalized(ComplexVector v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::kInvalidState, "cannot normalize a zero vector");
  for (auto& z : v) z /= n;
  return PureState(std::move(v));
}

ComplexMatrix PureState::projector() const { return ComplexMatrix::outer(vector_, vector_); }

PureState tensor(const PureState& a, const PureState& b) {
  return PureState::normalized(tensor(a.vector(), b.vector()));
}

// ---------------------------------------------------------------------------

DensityOperator::DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {
  const double tol = validation_eps();
  if (matrix_.dim() == 0) throw Error(ErrorCode::kInvalidState, "density operator has dimension 0");
  if (!matrix_.is_hermitian(tol))
    throw Error(ErrorCode::kNonHermitianInput, "density operator is not Hermitian");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0)) > tol) {
    std::ostringstream os;
    os << "trace ≠ 1 (trace = " << tr.real() << ")";
    throw Error(ErrorCode::kInvalidState, os.str());
  }
  const auto eig = eigen_hermitian(matrix_);
  if (eig.values.front() < -tol) {
    std::ostringstream os;
    os << "density operator is not positive (eigenvalue " << eig.values.front() << ")";
    throw Error(ErrorCode::kInvalidState, os.str());
  }
}

DensityOperator DensityOperator::from_pure(const PureState& psi) { return DensityOperator(psi.projector()); }

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(tensor(a.matrix(), b.matrix()));
}

double expectation(const ComplexMatrix& e, const DensityOperator& d) {
  require_same_dim(e.dim(), d.dim(), "expectation");
  if (!e.is_hermitian(validation_eps()))
    throw Error(ErrorCode::kNonHermitianInput, "effect operator is not Hermitian");
  const auto& m = d.matrix();
  Complex acc = 0.0;
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t k = 0; k < e.dim(); ++k) acc += e(i, k) * m(k, i);
  if (std::abs(acc.imag()) >= kEps)
    throw Error(ErrorCode::kNonHermitianInput, "trace of effect times state is not real");
  return acc.real();
}

double expectation(const ComplexMatrix& e, const PureState& psi) {
  require_same_dim(e.dim(), psi.dim(), "expectation");
  if (!e.is_hermitian(validation_eps()))
    throw Error(ErrorCode::kNonHermitianInput, "effect operator is not Hermitian");
  const Complex v = inner(psi.vector(), e.apply(psi.vector()));
  if (std::abs(v.imag()) >= kEps)
    throw Error(ErrorCode::kNonHermitianInput, "expectation value is not real");
  return v.real();
}

// ---------------------------------------------------------------------------

HermitianEigen eigen_hermitian(const ComplexMatrix& h, int max_sweeps) {
  const std::size_t n = h.dim();
  if (!h.is_hermitian(validation_eps()))
    throw Error(ErrorCode::kNonHermitianInput, "eigensolver input is not Hermitian");

  // Work on the exactly Hermitian part.
  ComplexMatrix a = h;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };
  const double scale = std::max(a.max_abs(), 1e-300);

  int sweep = 0;
  while (off_norm() > 1e-15 * scale) {
    if (sweep++ >= max_sweeps)
      throw Error(ErrorCode::kConvergenceFailure,
                  "Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag < 1e-300) continue;
        // Phase-rotate q so that a(p,q) is real, then apply a real Givens
        // rotation. Combined column transform on (p,q):
        //   V = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const Complex phase = a(p, q) / mag;  // e^{i phi}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
        const double c = std::cos(theta), s = std::sin(theta);
        const Complex v00 = c, v01 = s;
        const Complex v10 = -s * std::conj(phase), v11 = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A V
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * v00 + akq * v10;
          a(k, q) = akp * v01 + akq * v11;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- V^H A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(v00) * apk + std::conj(v10) * aqk;
          a(q, k) = std::conj(v01) * apk + std::conj(v11) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // accumulate eigenvectors
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * v00 + vkq * v10;
          v(k, q) = vkp * v01 + vkq * v11;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(a(idx, idx).real());
    ComplexVector col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v(k, idx);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

// ---------------------------------------------------------------------------

ComplexMatrix mixture_matrix(std::span<const ConvexDecomposition::Component> components) {
  if (components.empty()) throw Error(ErrorCode::kValidationError, "decomposition has no components");
  ComplexMatrix m(components.front().state.dim());
  for (const auto& c : components) m += c.weight * c.state.projector();
  return m;
}

ConvexDecomposition::ConvexDecomposition(std::vector<Component> components, DensityOperator target)
    : components_(std::move(components)), target_(std::move(target)) {
  if (components_.empty()) throw Error(ErrorCode::kValidationError, "decomposition has no components");
  double sum = 0.0;
  for (const auto& c : components_) {
    require_same_dim(c.state.dim(), target_.dim(), "decomposition component");
    if (!(c.weight > 0.0) || !std::isfinite(c.weight)) {
      std::ostringstream os;
      os << "decomposition weight " << c.weight << " is not strictly positive";
      throw Error(ErrorCode::kValidationError, os.str());
    }
    sum += c.weight;
  }
  if (std::abs(sum - 1.0) > validation_eps()) {
    std::ostringstream os;
    os << "weights sum to " << sum;
    throw Error(ErrorCode::kWeightSumInvalid, os.str());
  }
  const double err = mixture_matrix(components_).max_abs_diff(target_.matrix());
  if (err > kReconstructionTol) {
    std::ostringstream os;
    os << "decomposition does not reproduce the state (max entry error " << err << ")";
    throw Error(ErrorCode::kValidationError, os.str());
  }
}

ConvexDecomposition ConvexDecomposition::of_mixture(std::vector<Component> components) {
  DensityOperator target(mixture_matrix(components));
  return ConvexDecomposition(std::move(components), std::move(target));
}

ConvexDecomposition spectral_decompose(const DensityOperator& d) {
  auto eig = eigen_hermitian(d.matrix());
  std::vector<ConvexDecomposition::Component> comps;
  double kept = 0.0;
  for (std::size_t k = eig.values.size(); k-- > 0;) {
    if (eig.values[k] <= kEps) continue;
    kept += eig.values[k];
    comps.push_back({eig.values[k], PureState::normalized(std::move(eig.vectors[k]))});
  }
  // Dropped eigenvalues are at most kEps each; fold their mass back in so
  // the weights form an exact probability vector.
  for (auto& c : comps) c.weight /= kept;
  return ConvexDecomposition(std::move(comps), d);
}

}  // namespace qcorr
