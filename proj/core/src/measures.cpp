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

#include "dicke/measures.hpp"

#include "dicke/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace dicke {

namespace {

constexpr double kMeanYTol = 1e-8;
constexpr double kImagResidueTol = 1e-12;
constexpr double kZeroSpinTol = 1e-10;
constexpr double kClosedFormTol = 1e-9;
constexpr double kEntanglementFloor = 1e-13;

double real_expectation(const ComplexMatrix& op, const DickeState& rho, const char* name) {
  const Complex v = expectation(op, rho);
  if (std::abs(v.imag()) > kImagResidueTol) {
    std::ostringstream os;
    os << "expectation of " << name << " has imaginary part " << v.imag();
    throw Error(ErrorKind::kConsistency, os.str());
  }
  return v.real();
}

// Rotation angle of the mean spin about y, in (-pi, pi]. Rounding-level
// x-components are dropped so the angle does not jump between +pi and -pi.
double mean_spin_angle(double mean_x, double mean_z) {
  if (std::abs(mean_x) < 1e-13) mean_x = 0.0;
  double alpha = std::atan2(mean_x, mean_z);
  if (alpha <= -std::numbers::pi) alpha = std::numbers::pi;
  return alpha;
}

void fill_spectroscopic(SqueezingReport& r) {
  if (std::abs(r.u_param) < kZeroSpinTol) {
    r.xi_r_n1 = std::numeric_limits<double>::infinity();
    r.xi_r_n2 = std::numeric_limits<double>::infinity();
    r.spectroscopic_unbounded = true;
    return;
  }
  const double u2 = r.u_param * r.u_param;
  r.xi_r_n1 = r.xi_s_n1 / u2;
  r.xi_r_n2 = r.xi_s_n2 / u2;
}

}  // namespace

SpinMoments spin_moments(const DickeState& rho) {
  const auto& ops = collective_operators();
  SpinMoments m;
  m.mean_y = real_expectation(ops.s_y, rho, "S_y");
  if (std::abs(m.mean_y) > kMeanYTol) {
    std::ostringstream os;
    os << "<S_y> = " << m.mean_y
       << ": the mean spin is outside the x-z plane (complex coherences; use a real M)";
    throw Error(ErrorKind::kPhaseConvention, os.str());
  }
  m.mean_x = real_expectation(ops.s_x, rho, "S_x");
  m.mean_z = real_expectation(ops.s_z, rho, "S_z");
  m.second_xx = real_expectation(ops.s_x * ops.s_x, rho, "S_x^2");
  m.second_yy = real_expectation(ops.s_y * ops.s_y, rho, "S_y^2");
  m.second_zz = real_expectation(ops.s_z * ops.s_z, rho, "S_z^2");
  const ComplexMatrix sym = 0.5 * (ops.s_x * ops.s_z + ops.s_z * ops.s_x);
  m.cross_xz_sym = real_expectation(sym, rho, "(S_x S_z)_sym");
  return m;
}

RotatedVariances rotated_variances(const SpinMoments& m, double alpha) {
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  return {m.second_zz * s * s + m.second_xx * c * c - m.cross_xz_sym * std::sin(2.0 * alpha),
          m.second_yy};
}

SqueezingReport squeezing_parameters(const DickeState& rho) {
  const auto m = spin_moments(rho);
  SqueezingReport r;
  r.alpha = mean_spin_angle(m.mean_x, m.mean_z);
  r.u_param = m.mean_z * std::cos(r.alpha) + m.mean_x * std::sin(r.alpha);
  const auto var = rotated_variances(m, r.alpha);
  constexpr double kSpin = 1.0;
  r.xi_s_n1 = 2.0 / kSpin * var.n1;
  r.xi_s_n2 = 2.0 / kSpin * var.n2;
  fill_spectroscopic(r);
  return r;
}

SqueezingReport squeezing_parameters_element_form(const DickeState& rho) {
  const auto m = spin_moments(rho);  // enforces the phase convention
  SqueezingReport r;
  r.alpha = mean_spin_angle(m.mean_x, m.mean_z);
  const double s = std::sin(r.alpha);
  const double c = std::cos(r.alpha);
  const double ss = rho.ss();
  const double eg = rho.eg().real();
  r.xi_s_n1 = 2.0 * (1.0 - ss) * s * s + (1.0 + ss + 2.0 * eg) * c * c;
  r.xi_s_n2 = 1.0 + ss - 2.0 * eg;
  const double coherence_sum = 2.0 * (rho.es().real() + rho.sg().real());
  r.u_param = (rho.ee() - rho.gg()) * c + coherence_sum / std::sqrt(2.0) * s;
  fill_spectroscopic(r);
  return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho4) {
  if (rho4.rows() != kProductDim || rho4.cols() != kProductDim)
    throw Error(ErrorKind::kInvalidInput, "partial_transpose: expected a 4x4 matrix");
  // Index k = 2 * (first qubit) + (second qubit).
  ComplexMatrix out(kProductDim, kProductDim);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t i2 = 0; i2 < 2; ++i2)
      for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          out(2 * i1 + j2, 2 * j1 + i2) = rho4(2 * i1 + i2, 2 * j1 + j2);
  return out;
}

ComplexMatrix partial_transpose(const ProductState& rho4) {
  return partial_transpose(rho4.matrix());
}

BlockSpectrum pt_block_spectrum(const DickeState& rho) {
  const double ss = rho.ss();
  const double ee = rho.ee();
  const double gg = rho.gg();
  const double eg = std::abs(rho.eg());
  const double root = std::sqrt((ee - gg) * (ee - gg) + ss * ss);
  return {0.5 * ss - eg, 0.5 * ss + eg, 0.5 * ((ee + gg) - root), 0.5 * ((ee + gg) + root)};
}

CubicCoefficients pt_cubic(const DickeState& rho) {
  const double ee = rho.ee();
  const double ss = rho.ss();
  const double gg = rho.gg();
  const double eg = rho.eg().real();
  const double es = rho.es().real();
  const double sg = rho.sg().real();
  const double half_ss = 0.5 * ss;
  const double det_outer = ee * gg - 0.25 * ss * ss;

  CubicCoefficients c;
  c.a2 = -(1.0 - half_ss + eg);
  c.a1 = (1.0 - ss) * (half_ss + eg) + det_outer - es * es - sg * sg;
  c.a0 = -(half_ss + eg) * det_outer + gg * es * es + ee * sg * sg - ss * sg * es;
  return c;
}

CubicSpectrum pt_cubic_spectrum(const DickeState& rho) {
  CubicSpectrum s;
  s.p1 = 0.5 * rho.ss() - rho.eg().real();
  s.coefficients = pt_cubic(rho);
  s.roots = cubic_roots(s.coefficients);
  return s;
}

double entanglement_measure(double pt_min_eigenvalue) {
  const double e = -2.0 * pt_min_eigenvalue;
  return e < kEntanglementFloor ? 0.0 : e;
}

EntanglementReport negativity(const DickeState& rho) {
  const auto pt = partial_transpose(dicke_to_product(rho));
  const auto eig = hermitian_eigen(pt);

  EntanglementReport report;
  std::copy(eig.eigenvalues.begin(), eig.eigenvalues.end(), report.pt_eigenvalues.begin());
  report.measure_e = entanglement_measure(report.pt_eigenvalues.front());

  if (rho.max_imag_coherence() > 1e-12) return report;

  std::array<Complex, 4> closed{};
  const bool block = std::abs(rho.es()) <= 1e-12 && std::abs(rho.sg()) <= 1e-12;
  if (block) {
    const auto b = pt_block_spectrum(rho);
    closed = {b.lambda1_minus, b.lambda1_plus, b.lambda2_minus, b.lambda2_plus};
    report.closed_form = b;
  } else {
    const auto c = pt_cubic_spectrum(rho);
    closed = {c.p1, c.roots[0], c.roots[1], c.roots[2]};
    report.closed_form = c;
  }
  std::sort(closed.begin(), closed.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  double worst = 0.0;
  for (std::size_t k = 0; k < closed.size(); ++k)
    worst = std::max(worst, std::abs(closed[k] - report.pt_eigenvalues[k]));
  if (worst > kClosedFormTol) {
    std::ostringstream os;
    os << "partial-transpose spectrum: closed form and numeric diagonalization differ by "
       << worst << " (" << (block ? "block" : "cubic") << " form)";
    throw Error(ErrorKind::kConsistency, os.str());
  }
  return report;
}

RelationCheck relation_check(const DickeState& rho) {
  RelationCheck r;
  r.e = negativity(rho).measure_e;
  r.one_minus_xi = 1.0 - squeezing_parameters(rho).xi_s_n2;
  r.gap = std::abs(r.e - r.one_minus_xi);
  return r;
}

}  // namespace dicke
