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

#include "dicke/error.hpp"
#include "dicke/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <functional>
#include <random>

namespace dicke {
namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

// Unitary from Gram-Schmidt on random columns.
ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  auto a = random_matrix(rng, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(a(i, j)) * a(i, k);
      for (std::size_t i = 0; i < n; ++i) a(i, k) -= dot * a(i, j);
    }
    double nrm = 0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(a(i, k));
    for (std::size_t i = 0; i < n; ++i) a(i, k) /= std::sqrt(nrm);
  }
  return a;
}

void expect_kind(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST(ComplexMatrix, RejectsNonFiniteAndOversizedInput) {
  expect_kind(ErrorKind::kInvalidInput, [] {
    ComplexMatrix(1, 1, {Complex(std::nan(""), 0)});
  });
  expect_kind(ErrorKind::kInvalidInput, [] { ComplexMatrix(17, 1); });
  expect_kind(ErrorKind::kInvalidInput, [] { ComplexMatrix(2, 2, {1, 2, 3}); });
}

TEST(ComplexMatrix, ArithmeticAndShapes) {
  const ComplexMatrix a{{1, Complex(0, 2)}, {3, 4}};
  const ComplexMatrix b{{0, 1}, {1, 0}};
  const ComplexMatrix ab{{Complex(0, 2), 1}, {4, 3}};
  EXPECT_EQ(a * b, ab);
  EXPECT_EQ(a.adjoint()(0, 1), Complex(3, 0));
  EXPECT_EQ(a.adjoint()(1, 0), Complex(0, -2));
  EXPECT_EQ(a.trace(), Complex(5, 0));
  EXPECT_EQ((a - a).max_abs(), 0.0);
  expect_kind(ErrorKind::kInvalidInput, [&] { (void)(a * ComplexMatrix(3, 3)); });
}

TEST(ComplexMatrix, VectorizationIsColumnStacking) {
  const ComplexMatrix m{{1, 2}, {3, 4}};
  const auto v = vectorize(m);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0], Complex(1));
  EXPECT_EQ(v[1], Complex(3));
  EXPECT_EQ(v[2], Complex(2));
  EXPECT_EQ(v[3], Complex(4));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    const auto r = random_matrix(rng, 3, 3);
    EXPECT_EQ(devectorize(vectorize(r), 3, 3), r);
  }
}

TEST(ComplexMatrix, KronMatchesSandwichIdentity) {
  // vec(A X B) = (B^T kron A) vec(X)
  std::mt19937_64 rng(2);
  const auto a = random_matrix(rng, 3, 3);
  const auto x = random_matrix(rng, 3, 3);
  const auto b = random_matrix(rng, 3, 3);
  const auto lhs = vectorize(a * x * b);
  const auto xv = vectorize(x);
  const auto rhs = kron(b.transpose(), a) * std::span<const Complex>(xv);
  for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_LT(std::abs(lhs[i] - rhs[i]), 1e-12);
}

TEST(HermitianEigen, SmallExamples) {
  const auto id = hermitian_eigen(ComplexMatrix::identity(2));
  EXPECT_DOUBLE_EQ(id.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(id.eigenvalues[1], 1.0);
  const auto px = hermitian_eigen(ComplexMatrix{{0, 1}, {1, 0}});
  EXPECT_NEAR(px.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(px.eigenvalues[1], 1.0, 1e-15);
}

TEST(HermitianEigen, QuantumSqueezedPartialTranspose) {
  // PT of the N = 1 pure state in the product basis.
  const double ee = 1.0 / 3, gg = 2.0 / 3, eg = std::sqrt(2.0) / 3;
  ComplexMatrix pt(4, 4);
  pt(0, 0) = ee;
  pt(3, 3) = gg;
  pt(1, 2) = pt(2, 1) = eg;
  const auto eig = hermitian_eigen(pt);
  const double expected[] = {-std::sqrt(2.0) / 3, 1.0 / 3, std::sqrt(2.0) / 3, 2.0 / 3};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(eig.eigenvalues[i], expected[i], 1e-14);
}

TEST(HermitianEigen, RecoversPlantedSpectrumAllSizes) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (std::size_t n = 1; n <= kMaxDim; ++n) {
    std::vector<double> lam(n);
    for (auto& x : lam) x = u(rng);
    const auto q = random_unitary(rng, n);
    const auto m = q * ComplexMatrix::diagonal(lam) * q.adjoint();
    const auto eig = hermitian_eigen(0.5 * (m + m.adjoint()));
    std::sort(lam.begin(), lam.end());
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(eig.eigenvalues[i], lam[i], 1e-10) << n;
    const auto& v = eig.eigenvectors;
    EXPECT_LT((v.adjoint() * v - ComplexMatrix::identity(n)).max_abs(), 1e-10);
    EXPECT_LT((m - v * ComplexMatrix::diagonal(eig.eigenvalues) * v.adjoint()).max_abs(), 1e-10);
  }
}

TEST(HermitianEigen, DegenerateSpectrum) {
  std::mt19937_64 rng(4);
  const auto q = random_unitary(rng, 6);
  const std::vector<double> lam = {1, 1, 1, 2, 2, -3};
  const auto m = q * ComplexMatrix::diagonal(lam) * q.adjoint();
  const auto eig = hermitian_eigen(0.5 * (m + m.adjoint()));
  const double sorted[] = {-3, 1, 1, 1, 2, 2};
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(eig.eigenvalues[i], sorted[i], 1e-12);
}

TEST(HermitianEigen, RejectsNonHermitianNamingEntry) {
  ComplexMatrix m{{1, 2}, {0, 1}};
  try {
    hermitian_eigen(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos) << e.what();
  }
  expect_kind(ErrorKind::kInvalidInput, [] { hermitian_eigen(ComplexMatrix(2, 3)); });
}

TEST(CubicRoots, Examples) {
  const auto zero = cubic_roots({0, 0, 0});
  for (const auto& r : zero) EXPECT_LT(std::abs(r), 1e-12);
  const auto f = cubic_roots({-6, 11, -6});
  EXPECT_NEAR(f[0].real(), 1, 1e-12);
  EXPECT_NEAR(f[1].real(), 2, 1e-12);
  EXPECT_NEAR(f[2].real(), 3, 1e-12);
  for (const auto& r : f) EXPECT_EQ(r.imag(), 0.0);
}

TEST(CubicRoots, CoherentDriveCoefficients) {
  const auto r = cubic_roots({-23.0 / 22, 51.0 / 484, -21.0 / 10648});
  EXPECT_NEAR(r[0].real(), 0.02456116, 1e-7);
  EXPECT_NEAR(r[1].real(), 0.08587839, 1e-7);
  EXPECT_NEAR(r[2].real(), 0.93501500, 1e-6);
}

TEST(CubicRoots, ResidualsVietaAndComplexPairs) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int k = 0; k < 2000; ++k) {
    const CubicCoefficients c{u(rng), u(rng), u(rng)};
    const auto r = cubic_roots(c);
    for (const auto& x : r)
      EXPECT_LT(std::abs(c.evaluate(x)), 1e-10 * (1 + std::pow(std::abs(x), 3)));
    EXPECT_LT(std::abs(r[0] + r[1] + r[2] + c.a2), 1e-9);
    EXPECT_LT(std::abs(r[0] * r[1] + r[0] * r[2] + r[1] * r[2] - c.a1), 1e-9 * (1 + std::abs(c.a1)));
    EXPECT_LT(std::abs(r[0] * r[1] * r[2] + c.a0), 1e-9 * (1 + std::abs(c.a0)));
    EXPECT_LE(r[0].real(), r[1].real());
    EXPECT_LE(r[1].real(), r[2].real());
  }
}

TEST(CubicRoots, RepeatedRoots) {
  // (p - 0.5)^2 (p + 2) and (p - 1)^3
  const auto d = cubic_roots({1, -1.75, 0.5});
  EXPECT_NEAR(d[0].real(), -2, 1e-10);
  EXPECT_NEAR(d[1].real(), 0.5, 1e-7);
  EXPECT_NEAR(d[2].real(), 0.5, 1e-7);
  const auto t = cubic_roots({-3, 3, -1});
  for (const auto& x : t) EXPECT_NEAR(std::abs(x - 1.0), 0.0, 1e-5);
}

TEST(NullVector, ExplicitDirection) {
  const auto v = null_vector(ComplexMatrix{{1, 0}, {0, 0}});
  EXPECT_NEAR(std::abs(v[0]), 0, 1e-15);
  EXPECT_EQ(v[1], Complex(1, 0));
}

TEST(NullVector, InvariantUnderScalingAndPhaseFixed) {
  std::mt19937_64 rng(6);
  auto m = random_matrix(rng, 5, 5);
  // Make column 4 a combination of the others so the rank drops by one.
  for (std::size_t i = 0; i < 5; ++i) m(i, 4) = m(i, 0) - Complex(0, 2) * m(i, 1);
  const auto v = null_vector(m);
  EXPECT_LT(norm2(m * std::span<const Complex>(v)), 1e-10 * m.max_abs());
  EXPECT_NEAR(norm2(v), 1.0, 1e-12);
  const auto w = null_vector(Complex(-3.5, 1.0) * m);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_LT(std::abs(v[i] - w[i]), 1e-10);
  std::size_t big = 0;
  for (std::size_t i = 1; i < 5; ++i)
    if (std::abs(v[i]) > std::abs(v[big])) big = i;
  EXPECT_EQ(v[big].imag(), 0.0);
  EXPECT_GT(v[big].real(), 0.0);
}

TEST(NullVector, ReportsMissingAndDegenerateNullSpace) {
  expect_kind(ErrorKind::kNoSteadyState, [] { null_vector(ComplexMatrix::identity(3)); });
  expect_kind(ErrorKind::kDegenerateSteadyState,
              [] { null_vector(ComplexMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}); });
}

TEST(GeneralEigenvalues, MatchesPlantedNonNormalSpectrum) {
  // Upper-triangular T conjugated by a random invertible matrix.
  std::mt19937_64 rng(7);
  ComplexMatrix t(5, 5);
  const Complex lam[] = {Complex(-1, 2), Complex(-0.5, 0), Complex(0, 0), Complex(-3, -1),
                         Complex(-1, -2)};
  for (std::size_t i = 0; i < 5; ++i) {
    t(i, i) = lam[i];
    for (std::size_t j = i + 1; j < 5; ++j) t(i, j) = Complex(0.3 * i, 0.1 * j);
  }
  const auto q = random_unitary(rng, 5);
  const auto ev = general_eigenvalues(q * t * q.adjoint());
  for (const auto& l : lam) {
    double best = 1e9;
    for (const auto& e : ev) best = std::min(best, std::abs(e - l));
    EXPECT_LT(best, 1e-10) << l;
  }
}

}  // namespace
}  // namespace dicke
