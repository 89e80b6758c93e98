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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace dicke {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr int kMaxSweeps = 100;

// Smaller root of t^2 + 2 zeta t - 1 = 0, the Jacobi rotation tangent.
double rotation_tangent(double zeta) {
  if (std::abs(zeta) > 1e150) return 0.5 / zeta;
  const double sign = zeta >= 0.0 ? 1.0 : -1.0;
  return sign / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
}

// Fix the phase of each column so its largest-magnitude entry is real positive.
void normalize_phases(ComplexMatrix& v) {
  for (std::size_t c = 0; c < v.cols(); ++c) {
    std::size_t arg = 0;
    for (std::size_t r = 1; r < v.rows(); ++r)
      if (std::abs(v(r, c)) > std::abs(v(arg, c)) + 1e-14) arg = r;
    const double mag = std::abs(v(arg, c));
    if (mag == 0.0) continue;
    const Complex phase = std::conj(v(arg, c)) / mag;
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, c) *= phase;
    v(arg, c) = mag;
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) {
    std::ostringstream os;
    os << "hermitian_eigen: matrix is " << m.rows() << "x" << m.cols() << ", not square";
    throw Error(ErrorKind::kInvalidInput, os.str());
  }
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const double dev = std::abs(m(r, c) - std::conj(m(c, r)));
      if (dev > kHermitianTol) {
        std::ostringstream os;
        os << "hermitian_eigen: entry (" << r << "," << c << ") differs from conj of (" << c
           << "," << r << ") by " << dev;
        throw Error(ErrorKind::kInvalidInput, os.str());
      }
    }

  ComplexMatrix a = 0.5 * (m + m.adjoint());
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  double frob = 0.0;
  for (const auto& x : a.entries()) frob += std::norm(x);
  frob = std::sqrt(frob);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-17 * frob) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag < std::numeric_limits<double>::min()) continue;
        const Complex e = g / mag;           // phase of a(p,q)
        const Complex e_bar = std::conj(e);
        const double zeta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = rotation_tangent(zeta);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- A J, with J columns p' = c e_p - s conj(e) e_q, q' = s e_p + c conj(e) e_q.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * e_bar * akq;
          a(k, q) = s * akp + c * e_bar * akq;
        }
        // A <- J^H A
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * e * aqk;
          a(q, k) = s * apk + c * e * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * e_bar * vkq;
          v(k, q) = s * vkp + c * e_bar * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  normalize_phases(out.eigenvectors);
  return out;
}

SingularValueDecomposition singular_value_decomposition(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::kInvalidInput, "svd: matrix must be square");
  const std::size_t n = m.rows();
  ComplexMatrix u = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma{};
        for (std::size_t k = 0; k < n; ++k) {
          alpha += std::norm(u(k, p));
          beta += std::norm(u(k, q));
          gamma += std::conj(u(k, p)) * u(k, q);
        }
        const double mag = std::abs(gamma);
        if (mag <= eps * std::sqrt(alpha * beta) || mag < std::numeric_limits<double>::min())
          continue;
        rotated = true;
        const Complex e_bar = std::conj(gamma / mag);
        const double t = rotation_tangent((beta - alpha) / (2.0 * mag));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex ukp = u(k, p);
          const Complex ukq = e_bar * u(k, q);
          u(k, p) = c * ukp - s * ukq;
          u(k, q) = s * ukp + c * ukq;
          const Complex vkp = v(k, p);
          const Complex vkq = e_bar * v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += std::norm(u(r, c));
    sigma[c] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  SingularValueDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.singular_values[k] = sigma[order[k]];
    for (std::size_t r = 0; r < n; ++r) out.right_vectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexVector null_vector(const ComplexMatrix& m, double tol) {
  if (!m.is_square() || m.rows() == 0)
    throw Error(ErrorKind::kInvalidInput, "null_vector: matrix must be square and non-empty");
  const auto svd = singular_value_decomposition(m);
  const std::size_t n = m.rows();
  const double largest = svd.singular_values.front();
  const double cutoff = tol * largest;

  std::size_t below = 0;
  for (double s : svd.singular_values)
    if (s <= cutoff) ++below;
  if (largest == 0.0) below = n;

  if (below == 0) {
    std::ostringstream os;
    os << "no null direction: smallest singular value " << svd.singular_values.back()
       << " exceeds tolerance " << cutoff;
    throw Error(ErrorKind::kNoSteadyState, os.str());
  }
  if (below >= 2) {
    std::ostringstream os;
    os << below << " singular values below tolerance " << cutoff << "; gap between the two smallest: "
       << svd.singular_values[n - 2] << " vs " << svd.singular_values[n - 1];
    throw Error(ErrorKind::kDegenerateSteadyState, os.str());
  }

  ComplexVector v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = svd.right_vectors(r, n - 1);
  const double nrm = norm2(v);
  std::size_t arg = 0;
  for (std::size_t r = 1; r < n; ++r)
    if (std::abs(v[r]) > std::abs(v[arg]) + 1e-14) arg = r;
  const Complex phase = std::conj(v[arg]) / std::abs(v[arg]);
  for (auto& x : v) x *= phase / nrm;
  v[arg] = v[arg].real();
  return v;
}

}  // namespace dicke
