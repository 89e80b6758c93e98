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

namespace dicke {

namespace {

// Eigenvalues of an upper Hessenberg matrix by single-shift complex QR with
// Wilkinson shifts and deflation.
std::vector<Complex> hessenberg_eigenvalues(ComplexMatrix h) {
  const std::size_t n = h.rows();
  std::vector<Complex> eig(n);
  if (n == 0) return eig;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  std::size_t hi = n - 1;
  int iter = 0;
  int total = 0;
  while (hi > 0) {
    std::size_t l = hi;
    while (l > 0) {
      const double scale = std::abs(h(l, l)) + std::abs(h(l - 1, l - 1));
      if (std::abs(h(l, l - 1)) <= eps * (scale == 0.0 ? 1.0 : scale)) break;
      --l;
    }
    if (l > 0) h(l, l - 1) = 0.0;
    if (l == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++total > 1000) throw Error(ErrorKind::kConsistency, "companion QR failed to converge");
    ++iter;

    Complex mu;
    if (iter % 11 == 0) {
      mu = h(hi, hi) + std::abs(h(hi, hi - 1)) * Complex(0.75, 0.4);
    } else {
      const Complex a = h(hi - 1, hi - 1);
      const Complex b = h(hi - 1, hi);
      const Complex c = h(hi, hi - 1);
      const Complex d = h(hi, hi);
      const Complex half_tr = 0.5 * (a + d);
      const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
      const Complex mu1 = half_tr + disc;
      const Complex mu2 = half_tr - disc;
      mu = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
    }

    for (std::size_t k = l; k <= hi; ++k) h(k, k) -= mu;
    std::vector<std::pair<Complex, Complex>> rotations;
    for (std::size_t k = l; k < hi; ++k) {
      const Complex x = h(k, k);
      const Complex y = h(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      const Complex c = r == 0.0 ? Complex(1.0) : x / r;
      const Complex s = r == 0.0 ? Complex(0.0) : y / r;
      rotations.emplace_back(c, s);
      for (std::size_t j = k; j <= hi; ++j) {
        const Complex top = h(k, j);
        const Complex bot = h(k + 1, j);
        h(k, j) = std::conj(c) * top + std::conj(s) * bot;
        h(k + 1, j) = -s * top + c * bot;
      }
    }
    for (std::size_t k = l; k < hi; ++k) {
      const auto [c, s] = rotations[k - l];
      for (std::size_t i = l; i <= hi; ++i) {
        const Complex left = h(i, k);
        const Complex right = h(i, k + 1);
        h(i, k) = c * left + s * right;
        h(i, k + 1) = -std::conj(s) * left + std::conj(c) * right;
      }
    }
    for (std::size_t k = l; k <= hi; ++k) h(k, k) += mu;
  }
  eig[0] = h(0, 0);
  return eig;
}

ComplexMatrix hessenberg_reduce(ComplexMatrix a) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    ComplexVector v(n);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] += phase * xnorm;
    const double vnorm = norm2(v);
    if (vnorm == 0.0) continue;
    for (auto& x : v) x /= vnorm;
    // A <- (I - 2vv^H) A (I - 2vv^H)
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot{};
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * a(i, j);
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= 2.0 * v[i] * dot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot{};
      for (std::size_t j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= 2.0 * dot * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
  return a;
}

Complex derivative(const CubicCoefficients& c, Complex p) {
  return (3.0 * p + 2.0 * c.a2) * p + c.a1;
}

}  // namespace

std::vector<Complex> general_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::kInvalidInput, "general_eigenvalues: not square");
  return hessenberg_eigenvalues(hessenberg_reduce(m));
}

std::array<Complex, 3> cubic_roots(const CubicCoefficients& c) {
  if (!std::isfinite(c.a2) || !std::isfinite(c.a1) || !std::isfinite(c.a0))
    throw Error(ErrorKind::kInvalidInput, "cubic_roots: non-finite coefficient");

  const ComplexMatrix companion{{-c.a2, -c.a1, -c.a0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  const auto eig = hessenberg_eigenvalues(companion);
  std::array<Complex, 3> roots{eig[0], eig[1], eig[2]};

  // Multiple roots come back as a small cluster; the cluster mean is much
  // better conditioned than its members.
  std::array<int, 3> cluster{0, 1, 2};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(roots[i] - roots[j]) < 1e-4 * (1.0 + std::abs(roots[i])))
        cluster[j] = cluster[i];
  std::array<bool, 3> clustered{};
  for (int id = 0; id < 3; ++id) {
    Complex sum{};
    int count = 0;
    double worst = 0.0;
    for (int k = 0; k < 3; ++k)
      if (cluster[k] == id) {
        sum += roots[k];
        ++count;
        worst = std::max(worst, std::abs(c.evaluate(roots[k])));
      }
    if (count < 2) continue;
    const Complex mean = sum / static_cast<double>(count);
    if (std::abs(c.evaluate(mean)) <= worst) {
      for (int k = 0; k < 3; ++k)
        if (cluster[k] == id) {
          roots[k] = mean;
          clustered[k] = true;
        }
    }
  }

  for (int k = 0; k < 3; ++k) {
    if (clustered[k]) continue;
    for (int it = 0; it < 3; ++it) {
      const Complex d = derivative(c, roots[k]);
      if (std::abs(d) == 0.0) break;
      const Complex next = roots[k] - c.evaluate(roots[k]) / d;
      if (!(std::abs(c.evaluate(next)) < std::abs(c.evaluate(roots[k])))) break;
      roots[k] = next;
    }
  }

  for (auto& r : roots)
    if (std::abs(r.imag()) < 1e-9) r = r.real();
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

}  // namespace dicke
