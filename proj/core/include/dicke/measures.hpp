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

// Spin squeezing and entanglement of two-atom Dicke states.
//
// Squeezing is measured in the plane orthogonal to the mean spin, after a
// single rotation about y by alpha = atan2(<S_x>, <S_z>):
//   n3 = (sin a, 0, cos a),  n1 = (cos a, 0, -sin a),  n2 = y.
// With total spin S = 1:
//   Kitagawa-Ueda   xi^S_i = (2/S) Var(S_ni)
//   spectroscopic   xi^R_i = 2S Var(S_ni) / <S_n3>^2 = xi^S_i / U^2
// where U = <S_n3> >= 0 is the mean spin length.
//
// Entanglement E = max(0, -2 lambda_min) of the partial transpose. This is
// twice the usual negativity, so E is 1 for a maximally entangled state.

#include "dicke/model.hpp"
#include "dicke/numerics.hpp"

#include <array>
#include <optional>
#include <variant>

namespace dicke {

struct SpinMoments {
  double mean_x = 0.0;
  double mean_y = 0.0;
  double mean_z = 0.0;
  double second_xx = 0.0;
  double second_yy = 0.0;
  double second_zz = 0.0;
  double cross_xz_sym = 0.0;  // <S_x S_z + S_z S_x>/2
};

/// Throws kPhaseConvention if |<S_y>| > 1e-8: the squeezing analysis assumes
/// the mean spin lies in the x-z plane.
SpinMoments spin_moments(const DickeState& rho);

struct RotatedVariances {
  double n1 = 0.0;
  double n2 = 0.0;
};

/// Var(S_n1) = <Sz^2> sin^2 a + <Sx^2> cos^2 a - <SxSz>_sym sin 2a,
/// Var(S_n2) = <Sy^2>.
RotatedVariances rotated_variances(const SpinMoments& m, double alpha);

struct SqueezingReport {
  double alpha = 0.0;
  double u_param = 0.0;
  double xi_s_n1 = 0.0;
  double xi_s_n2 = 0.0;
  double xi_r_n1 = 0.0;  // +inf when the mean spin vanishes
  double xi_r_n2 = 0.0;
  bool spectroscopic_unbounded = false;
};

/// Both squeezing parameters from the rotated variances.
SqueezingReport squeezing_parameters(const DickeState& rho);

/// Density-matrix element form:
///   xi^S_n1 = 2(1 - ss) sin^2 a + (1 + ss + 2 eg) cos^2 a
///   xi^S_n2 = 1 + ss - 2 eg
///   U = (ee - gg) cos a + (es + sg + se + gs) sin a / sqrt(2)
/// The n1 expression has no <SxSz> cross term, so it equals the rotated
/// variance only when rho_es = rho_sg = 0. xi^S_n2 is always exact.
SqueezingReport squeezing_parameters_element_form(const DickeState& rho);

/// Transposes the second qubit's indices of a 4x4 matrix.
ComplexMatrix partial_transpose(const ComplexMatrix& rho4);
ComplexMatrix partial_transpose(const ProductState& rho4);

/// Partial-transpose spectrum of a state without one-photon coherences:
///   lambda1(+-) = ss/2 +- |eg|
///   lambda2(+-) = ((ee + gg) +- sqrt((ee - gg)^2 + ss^2)) / 2
struct BlockSpectrum {
  double lambda1_minus = 0.0;
  double lambda1_plus = 0.0;
  double lambda2_minus = 0.0;
  double lambda2_plus = 0.0;
};

/// One eigenvalue p1 = ss/2 - eg plus the roots of the monic cubic. Valid for
/// any state with real coherences.
struct CubicSpectrum {
  double p1 = 0.0;
  CubicCoefficients coefficients;
  std::array<Complex, 3> roots{};
};

BlockSpectrum pt_block_spectrum(const DickeState& rho);

/// p^3 - (1 - ss/2 + eg) p^2
///   + [(1 - ss)(ss/2 + eg) + ee gg - ss^2/4 - es^2 - sg^2] p
///   - (ss/2 + eg)(ee gg - ss^2/4) + gg es^2 + ee sg^2 - ss sg es
CubicCoefficients pt_cubic(const DickeState& rho);
CubicSpectrum pt_cubic_spectrum(const DickeState& rho);

struct EntanglementReport {
  std::array<double, 4> pt_eigenvalues{};  // ascending, numeric
  double measure_e = 0.0;
  std::variant<std::monostate, BlockSpectrum, CubicSpectrum> closed_form;

  double pt_min_eigenvalue() const { return pt_eigenvalues.front(); }
};

/// Numeric PT spectrum plus the matching closed form when coherences are
/// real. Throws kConsistency if the two disagree beyond 1e-9.
EntanglementReport negativity(const DickeState& rho);

/// E = max(0, -2 lambda_min), with values below 1e-13 reported as 0.
double entanglement_measure(double pt_min_eigenvalue);

struct RelationCheck {
  double e = 0.0;
  double one_minus_xi = 0.0;  // 1 - xi^S_n2
  double gap = 0.0;           // |e - one_minus_xi|
};

RelationCheck relation_check(const DickeState& rho);

}  // namespace dicke
