// Copyright 2026 The dicke-squeezing Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Small dense complex linear algebra. Everything here is sized for the
// two-atom problem: 3x3 Dicke states, 4x4 product states and 9x9
// Liouvillians. Dimensions above kMaxDim are rejected.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dicke {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr std::size_t kMaxDim = 16;

/// Row-major dense complex matrix with at most kMaxDim rows and columns.
/// Construction rejects non-finite entries.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  /// Largest absolute entry.
  double max_abs() const noexcept;
  /// Largest |m(i,j) - conj(m(j,i))|.
  double hermiticity_error() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Commutator [a, b] = ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// |a><b|
ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

/// Column-stacking vectorization: vec(m)[c * rows + r] = m(r, c).
/// With this convention vec(A X B) = (B^T (x) A) vec(X).
ComplexVector vectorize(const ComplexMatrix& m);
ComplexMatrix devectorize(std::span<const Complex> v, std::size_t rows, std::size_t cols);

double norm2(std::span<const Complex> v);
double max_abs(std::span<const Complex> v);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Cyclic Jacobi diagonalization. Throws kInvalidInput if `m` is not square
/// or deviates from Hermitian by more than 1e-12 in any entry.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

struct SingularValueDecomposition {
  std::vector<double> singular_values;  // descending
  ComplexMatrix right_vectors;          // column k pairs with singular_values[k]
};

/// One-sided (Hestenes) Jacobi SVD of a square matrix. Only the singular
/// values and right singular vectors are kept.
SingularValueDecomposition singular_value_decomposition(const ComplexMatrix& m);

/// Unit vector spanning the null space of `m`. `tol` is relative to the
/// largest singular value. The largest-magnitude entry of the result is real
/// and positive. Throws kNoSteadyState when no singular value is below tol and
/// kDegenerateSteadyState when two or more are.
ComplexVector null_vector(const ComplexMatrix& m, double tol = 1e-10);

/// Eigenvalues of a general square matrix (Householder reduction to
/// Hessenberg form, then shifted complex QR). Unordered. Used for spectral
/// diagnostics of the Liouvillian; no eigenvectors.
std::vector<Complex> general_eigenvalues(const ComplexMatrix& m);

/// Monic cubic p^3 + a2 p^2 + a1 p + a0.
struct CubicCoefficients {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;

  Complex evaluate(Complex p) const { return ((p + a2) * p + a1) * p + a0; }
};

/// Roots from the eigenvalues of the companion matrix, sorted by real part.
/// Roots whose imaginary part is below 1e-9 are returned exactly real.
std::array<Complex, 3> cubic_roots(const CubicCoefficients& c);

}  // namespace dicke
