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

// Reference values written directly from the physics, independent of the
// library's own closed forms. Rates in units of gamma.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

struct Squeezed {
  double ee, ss, eg, gg;
};

// Steady state for the squeezed vacuum alone. The sign of rho_eg is opposite
// to the sign of M (squeezing phase pi gives positive coherence).
inline Squeezed squeezed(double n, double m) {
  const double m2 = m * m;
  const double b = 3 * n * n + 3 * n + 1 - 3 * m2;
  Squeezed s{};
  s.ee = (n * n * (2 * n + 1) - (2 * n - 1) * m2) / ((2 * n + 1) * b);
  s.ss = (n * (n + 1) - m2) / b;
  s.eg = (m > 0 ? -1.0 : 1.0) * std::abs(m) / ((2 * n + 1) * b);
  s.gg = 1 - s.ee - s.ss;
  return s;
}

struct Coherent {
  double ee, ss, sg, es, eg, gg;
};

inline Coherent coherent(double w) {
  const double d = 3 * std::pow(w, 4) + 4 * w * w + 4;
  Coherent c{};
  c.ee = std::pow(w, 4) / d;
  c.ss = (std::pow(w, 4) + 2 * w * w) / d;
  c.sg = std::sqrt(2.0) * w * (w * w + 2) / d;
  c.es = std::sqrt(2.0) * std::pow(w, 3) / d;
  c.eg = 2 * w * w / d;
  c.gg = 1 - c.ee - c.ss;
  return c;
}

// Entanglement measures obtained by substituting the closed forms into
// E = max(0, 2|rho_eg| - rho_ss).
inline double e_classical(double n) {
  return std::max(0.0, n * (1 - 2 * n) / ((2 * n + 1) * (3 * n + 1)));
}
inline double e_quantum(double n) { return 2 * std::sqrt(n * (n + 1)) / (2 * n + 1); }
inline double e_coherent(double w) {
  return std::max(0.0, w * w * (2 - w * w) / (3 * std::pow(w, 4) + 4 * w * w + 4));
}

// Partial-transpose eigenvalues of a state without one-photon coherences.
inline std::array<double, 4> pt_block(double ee, double ss, double eg, double gg) {
  const double r = std::sqrt((ee - gg) * (ee - gg) + ss * ss);
  std::array<double, 4> v = {ss / 2 - std::abs(eg), ss / 2 + std::abs(eg), (ee + gg - r) / 2,
                             (ee + gg + r) / 2};
  std::sort(v.begin(), v.end());
  return v;
}

// Populations of the two entangled eigenstates in the {g, e} block.
inline std::array<double, 2> pi_pm(double ee, double eg, double gg) {
  const double r = std::sqrt((gg - ee) * (gg - ee) + 4 * eg * eg);
  return {(gg + ee + r) / 2, (gg + ee - r) / 2};
}

// Eigenvalues of a real symmetric 4x4 by brute-force Jacobi with real
// rotations; independent of the library eigensolver.
inline std::array<double, 4> symmetric_eigenvalues(std::array<std::array<double, 4>, 4> a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < 4; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::array<double, 4> v = {a[0][0], a[1][1], a[2][2], a[3][3]};
  std::sort(v.begin(), v.end());
  return v;
}

// Partial transpose (second qubit) of the embedded state with real
// coherences, written out element by element in the product basis
// {ee, eg, ge, gg}.
inline std::array<std::array<double, 4>, 4> pt_matrix(double ee, double ss, double gg, double es,
                                                      double sg, double eg) {
  const double h = 1 / std::sqrt(2.0);
  // rho4 before transposition.
  std::array<std::array<double, 4>, 4> r{};
  r[0][0] = ee;
  r[0][1] = r[0][2] = h * es;
  r[0][3] = eg;
  r[1][1] = r[1][2] = r[2][1] = r[2][2] = ss / 2;
  r[1][3] = r[2][3] = h * sg;
  r[3][3] = gg;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) r[i][j] = r[j][i];
  std::array<std::array<double, 4>, 4> t{};
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) t[2 * a1 + a2][2 * b1 + b2] = r[2 * a1 + b2][2 * b1 + a2];
  return t;
}

}  // namespace oracle
