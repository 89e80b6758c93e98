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

#include "dicke/analytic.hpp"

#include "dicke/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace dicke {

DickeState steady_squeezed(double n_ph, double m_corr) {
  SystemParams p;
  p.n_ph = n_ph;
  p.m_corr = m_corr;
  validate(p);

  // Written in terms of the distance to the quantum bound,
  // d = N(N+1) - M^2, so that B = 1 + 3d. Forming d as a product of
  // sqrt(N(N+1)) -+ |M| keeps it exactly zero on the bound, where the
  // textbook form loses ~N^2 eps to cancellation and the rank-1 state
  // drifts off positivity at large N.
  const double n = n_ph;
  const double q = std::sqrt(n * (n + 1.0));
  const double m_abs = std::abs(m_corr);
  const double d = std::max(0.0, (q - m_abs) * (q + m_abs));
  const double bracket = 1.0 + 3.0 * d;
  const double two_n1 = 2.0 * n + 1.0;

  RealDickeElements el;
  el.ee = (n + (2.0 * n - 1.0) * d) / (two_n1 * bracket);
  el.ss = d / bracket;
  el.gg = 1.0 - el.ee - el.ss;
  el.eg = -m_corr / (two_n1 * bracket);
  return DickeState::from_real_elements(el);
}

DickeState steady_coherent(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    std::ostringstream os;
    os << "steady_coherent: omega must be finite and non-negative (got " << omega << ")";
    throw Error(ErrorKind::kBoundViolation, os.str());
  }
  const double w2 = omega * omega;
  const double w4 = w2 * w2;
  const double d = 3.0 * w4 + 4.0 * w2 + 4.0;
  const double r2 = std::sqrt(2.0);

  RealDickeElements el;
  el.ee = w4 / d;
  el.ss = (w4 + 2.0 * w2) / d;
  el.gg = (w4 + 2.0 * w2 + 4.0) / d;
  el.eg = 2.0 * w2 / d;
  el.sg = r2 * omega * (w2 + 2.0) / d;
  el.es = r2 * omega * w2 / d;
  return DickeState::from_real_elements(el);
}

DickeState analytic_steady_state(const SystemParams& p) {
  validate(p);
  if (p.m_corr.imag() != 0.0)
    throw Error(ErrorKind::kNotApplicable,
                "closed-form steady states need real M (phase 0 or pi)");
  if (p.omega == 0.0) return steady_squeezed(p.n_ph, p.m_corr.real());
  if (p.n_ph == 0.0 && p.m_corr == Complex{}) return steady_coherent(p.omega / p.gamma);
  throw Error(ErrorKind::kNotApplicable,
              "no closed form for simultaneous coherent and squeezed driving");
}

TwoLevelAmplitudes pure_squeezed_state(double n_ph) {
  if (!(n_ph >= 0.0)) throw Error(ErrorKind::kBoundViolation, "pure_squeezed_state: N < 0");
  const double norm = std::sqrt(2.0 * n_ph + 1.0);
  return {std::sqrt(n_ph + 1.0) / norm, std::sqrt(n_ph) / norm};
}

namespace {

// Eigenvector of [[gg, ge], [eg, ee]] (rows/cols ordered g, e) for eigenvalue
// `pi`. Two equivalent forms exist:
//   a = (pi - ee, eg)    used for psi+
//   b = (ge, pi - gg)    used for psi-
// The better conditioned one is normalized, then rotated onto the phase of
// the preferred form so the output does not depend on which was picked.
TwoLevelAmplitudes block_eigenvector(double pi, double gg, double ee, Complex eg, bool plus) {
  const TwoLevelAmplitudes a{pi - ee, eg};
  const TwoLevelAmplitudes b{std::conj(eg), pi - gg};
  const double na = std::hypot(std::abs(a.g), std::abs(a.e));
  const double nb = std::hypot(std::abs(b.g), std::abs(b.e));
  const auto& pick = na >= nb ? a : b;
  const double n = std::max(na, nb);
  if (n < 1e-300) return {};
  TwoLevelAmplitudes v{pick.g / n, pick.e / n};

  const auto& ref = plus ? a : b;
  const Complex overlap = std::conj(ref.g) * v.g + std::conj(ref.e) * v.e;
  if (std::abs(overlap) > 1e-300) {
    const Complex phase = std::conj(overlap) / std::abs(overlap);
    v.g *= phase;
    v.e *= phase;
  }
  return v;
}

}  // namespace

EigenDecomposition entangled_eigenstates(const DickeState& rho) {
  if (std::abs(rho.es()) > 1e-12 || std::abs(rho.sg()) > 1e-12) {
    std::ostringstream os;
    os << "entangled_eigenstates: one-photon coherences present (|rho_es| = "
       << std::abs(rho.es()) << ", |rho_sg| = " << std::abs(rho.sg())
       << "); use hermitian_eigen on the full matrix instead";
    throw Error(ErrorKind::kNotApplicable, os.str());
  }
  const double gg = rho.gg();
  const double ee = rho.ee();
  const Complex eg = rho.eg();

  const double mean = 0.5 * (gg + ee);
  const double half_split = 0.5 * std::sqrt((gg - ee) * (gg - ee) + 4.0 * std::norm(eg));

  EigenDecomposition d;
  d.pi_plus = mean + half_split;
  d.pi_minus = mean - half_split;
  if (d.pi_minus < 0.0 && d.pi_minus > -1e-14) d.pi_minus = 0.0;
  d.residual_population = rho.ss();

  if (half_split == 0.0) {
    d.psi_plus = {1.0, 0.0};
    d.psi_minus = {0.0, 1.0};
    return d;
  }
  d.psi_plus = block_eigenvector(d.pi_plus, gg, ee, eg, true);
  d.psi_minus = block_eigenvector(d.pi_minus, gg, ee, eg, false);
  return d;
}

ComplexMatrix reconstruct(const EigenDecomposition& d) {
  ComplexMatrix m(kDickeDim, kDickeDim);
  const auto add = [&](const TwoLevelAmplitudes& v, double w) {
    const std::array<Complex, 3> ket{v.e, 0.0, v.g};
    m += w * outer(ket, ket);
  };
  add(d.psi_plus, d.pi_plus);
  add(d.psi_minus, d.pi_minus);
  m(kSymmetric, kSymmetric) += d.residual_population;
  return m;
}

}  // namespace dicke
