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

// Finite-dimensional complex linear algebra for density operators.
//
// Matrices are dense, row-major and square. Tensor products use the
// row-major Kronecker convention, so for two qubits the basis order is
// (++, +-, -+, --).

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);
  /// Takes row-major entries; throws on non-square size or non-finite values.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  ComplexVector apply(std::span<const Complex> v) const;

  bool is_hermitian(double tol) const;
  /// Largest entrywise modulus of (this - other). Dimensions must agree.
  double max_abs_diff(const ComplexMatrix& other) const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product, dim(a) * dim(b).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(std::span<const Complex> a, std::span<const Complex> b);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a|b>
double norm(std::span<const Complex> v);

/// Unit vector; the ray it spans is the pure state.
class PureState {
 public:
  /// Throws InvalidState unless |v| = 1 within validation_eps().
  explicit PureState(ComplexVector v);
  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(ComplexVector v);

  std::size_t dim() const noexcept { return vector_.size(); }
  const ComplexVector& vector() const noexcept { return vector_; }
  ComplexMatrix projector() const;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  ComplexVector vector_;
};

PureState tensor(const PureState& a, const PureState& b);

/// Positive, trace-one Hermitian matrix.
class DensityOperator {
 public:
  /// Throws NonHermitianInput or InvalidState when an invariant fails.
  explicit DensityOperator(ComplexMatrix m);
  static DensityOperator from_pure(const PureState& psi);

  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// Tr(e * d). `e` must be Hermitian; the imaginary part of the trace must
/// vanish within kEps and is then discarded.
double expectation(const ComplexMatrix& e, const DensityOperator& d);
double expectation(const ComplexMatrix& e, const PureState& psi);

struct HermitianEigen {
  std::vector<double> values;          // ascending
  std::vector<ComplexVector> vectors;  // orthonormal, vectors[k] belongs to values[k]
};

/// Cyclic complex Jacobi rotations. Throws ConvergenceFailure after
/// `max_sweeps` full sweeps.
HermitianEigen eigen_hermitian(const ComplexMatrix& h, int max_sweeps = 100);

/// Weighted pure states realizing a density operator. Weights are strictly
/// positive and the mixture reproduces `target` within kReconstructionTol.
class ConvexDecomposition {
 public:
  struct Component {
    double weight;
    PureState state;
  };

  /// Throws WeightSumInvalid or ValidationError on a broken invariant.
  ConvexDecomposition(std::vector<Component> components, DensityOperator target);
  /// Builds the target as the mixture itself.
  static ConvexDecomposition of_mixture(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  const DensityOperator& target() const noexcept { return target_; }
  std::size_t size() const noexcept { return components_.size(); }

 private:
  std::vector<Component> components_;
  DensityOperator target_;
};

ComplexMatrix mixture_matrix(std::span<const ConvexDecomposition::Component> components);

/// Eigen-decomposition realized as a convex mixture: eigenvalues above kEps,
/// sorted descending. Vectors inside a degenerate eigenspace are whatever the
/// solver produced.
ConvexDecomposition spectral_decompose(const DensityOperator& d);

}  // namespace qcorr
