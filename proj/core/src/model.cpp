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

#include "dicke/model.hpp"

#include "dicke/error.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace dicke {

namespace {

constexpr double kStateTol = 1e-12;

}  // namespace

void validate_density_matrix(const ComplexMatrix& m, std::size_t dim, const char* what) {
  std::ostringstream os;
  if (m.rows() != dim || m.cols() != dim) {
    os << what << ": expected " << dim << "x" << dim << ", got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::kInvalidInput, os.str());
  }
  if (const double h = m.hermiticity_error(); h > kStateTol) {
    os << what << ": not Hermitian (deviation " << h << ")";
    throw Error(ErrorKind::kInvalidInput, os.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kStateTol) {
    os << what << ": trace " << tr.real() << "+" << tr.imag() << "i is not 1";
    throw Error(ErrorKind::kInvalidInput, os.str());
  }
  const auto eig = hermitian_eigen(m);
  if (eig.eigenvalues.front() < -kStateTol) {
    os << what << ": not positive semidefinite (eigenvalue " << eig.eigenvalues.front() << ")";
    throw Error(ErrorKind::kInvalidInput, os.str());
  }
}

DickeState DickeState::from_matrix(ComplexMatrix m) {
  validate_density_matrix(m, kDickeDim, "DickeState");
  return DickeState(std::move(m));
}

DickeState DickeState::from_real_elements(const RealDickeElements& el) {
  ComplexMatrix m(kDickeDim, kDickeDim);
  m(kExcited, kExcited) = el.ee;
  m(kSymmetric, kSymmetric) = el.ss;
  m(kGround, kGround) = el.gg;
  m(kExcited, kSymmetric) = m(kSymmetric, kExcited) = el.es;
  m(kSymmetric, kGround) = m(kGround, kSymmetric) = el.sg;
  m(kExcited, kGround) = m(kGround, kExcited) = el.eg;
  return from_matrix(std::move(m));
}

DickeState DickeState::pure(std::span<const Complex> amplitudes) {
  if (amplitudes.size() != kDickeDim)
    throw Error(ErrorKind::kInvalidInput, "DickeState::pure needs three amplitudes");
  const double n = norm2(amplitudes);
  if (n == 0.0) throw Error(ErrorKind::kInvalidInput, "DickeState::pure: zero vector");
  ComplexMatrix m = outer(amplitudes, amplitudes);
  m *= 1.0 / (n * n);
  return from_matrix(std::move(m));
}

DickeState DickeState::basis(DickeLevel level) {
  ComplexMatrix m(kDickeDim, kDickeDim);
  m(level, level) = 1.0;
  return DickeState(std::move(m));
}

double DickeState::purity() const { return (rho_ * rho_).trace().real(); }

double DickeState::max_imag_coherence() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < kDickeDim; ++r)
    for (std::size_t c = 0; c < kDickeDim; ++c)
      if (r != c) worst = std::max(worst, std::abs(rho_(r, c).imag()));
  return worst;
}

ProductState ProductState::from_matrix(ComplexMatrix m) {
  validate_density_matrix(m, kProductDim, "ProductState");
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<Complex, kProductDim> singlet{0.0, h, -h, 0.0};
  const auto leak = m * std::span<const Complex>(singlet);
  if (const double l = norm2(leak); l > kStateTol) {
    std::ostringstream os;
    os << "ProductState: support leaks into the singlet (norm " << l << ")";
    throw Error(ErrorKind::kInvalidInput, os.str());
  }
  return ProductState(std::move(m));
}

const CollectiveOperators& collective_operators() {
  static const CollectiveOperators ops = [] {
    const double r2 = std::sqrt(2.0);
    ComplexMatrix sp(kDickeDim, kDickeDim);
    sp(kExcited, kSymmetric) = r2;
    sp(kSymmetric, kGround) = r2;
    ComplexMatrix sm = sp.adjoint();
    ComplexMatrix sx = 0.5 * (sp + sm);
    ComplexMatrix sy = Complex(0.0, -0.5) * (sp - sm);
    const std::array<double, 3> z{1.0, 0.0, -1.0};
    return CollectiveOperators{std::move(sp), std::move(sm), std::move(sx), std::move(sy),
                               ComplexMatrix::diagonal(z)};
  }();
  return ops;
}

const ComplexMatrix& symmetric_embedding() {
  static const ComplexMatrix p = [] {
    const double h = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(kProductDim, kDickeDim);
    m(0, kExcited) = 1.0;
    m(1, kSymmetric) = h;
    m(2, kSymmetric) = h;
    m(3, kGround) = 1.0;
    return m;
  }();
  return p;
}

ProductState dicke_to_product(const DickeState& rho) {
  // Entry-wise form of P rho P^dagger: the s-s block picks up exactly 1/2 and
  // s-coherences 1/sqrt(2), so the trace is preserved bit for bit.
  const double h = 1.0 / std::sqrt(2.0);
  struct Slot {
    std::size_t product;
    DickeLevel level;
  };
  constexpr std::array<Slot, 4> slots{
      Slot{0, kExcited}, Slot{1, kSymmetric}, Slot{2, kSymmetric}, Slot{3, kGround}};
  const auto weight = [&](DickeLevel a, DickeLevel b) {
    if (a == kSymmetric && b == kSymmetric) return 0.5;
    if (a == kSymmetric || b == kSymmetric) return h;
    return 1.0;
  };
  ComplexMatrix m(kProductDim, kProductDim);
  for (const auto& r : slots)
    for (const auto& c : slots) m(r.product, c.product) = weight(r.level, c.level) * rho(r.level, c.level);
  return ProductState::from_matrix(std::move(m));
}

Complex expectation(const ComplexMatrix& op, const DickeState& rho) {
  if (op.rows() != kDickeDim || op.cols() != kDickeDim)
    throw Error(ErrorKind::kInvalidInput, "expectation: operator must be 3x3");
  return (op * rho.matrix()).trace();
}

}  // namespace dicke
