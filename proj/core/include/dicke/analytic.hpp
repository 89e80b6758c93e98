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

// Closed-form stationary states of the two-atom master equation (see
// dynamics.hpp for the conventions) and the eigen-decomposition of the
// squeezed-only states. Rates are in units of gamma.

#include "dicke/dynamics.hpp"
#include "dicke/model.hpp"

namespace dicke {

/// Amplitudes on the two-photon pair {|g>, |e>}.
struct TwoLevelAmplitudes {
  Complex g{};
  Complex e{};
};

/// rho = pi_plus |psi+><psi+| + pi_minus |psi-><psi-| + residual |s><s|
struct EigenDecomposition {
  TwoLevelAmplitudes psi_plus;
  TwoLevelAmplitudes psi_minus;
  double pi_plus = 0.0;
  double pi_minus = 0.0;
  double residual_population = 0.0;  // rho_ss
};

/// Squeezed vacuum only (omega = 0), real M:
///   rho_ee = (N^2(2N+1) - (2N-1)M^2) / ((2N+1) B)
///   rho_ss = (N(N+1) - M^2) / B
///   rho_eg = -M / ((2N+1) B),     B = 3N^2 + 3N + 1 - 3M^2
/// Throws kBoundViolation if N < 0 or M^2 > N(N+1).
DickeState steady_squeezed(double n_ph, double m_corr);

/// Coherent drive only (N = M = 0), omega in units of gamma:
///   D = 3 W^4 + 4 W^2 + 4
///   rho_ee = W^4/D, rho_ss = (W^4 + 2W^2)/D, rho_eg = 2W^2/D,
///   rho_sg = sqrt(2) W (W^2 + 2)/D, rho_es = sqrt(2) W^3/D
DickeState steady_coherent(double omega);

/// Dispatches to steady_squeezed or steady_coherent. Throws kNotApplicable
/// for the combined drive or complex M, which have no closed form here.
DickeState analytic_steady_state(const SystemParams& p);

/// Pure steady state for |M|^2 = N(N+1) at the phase with rho_eg >= 0:
/// (sqrt(N+1)|g> + sqrt(N)|e>)/sqrt(2N+1).
TwoLevelAmplitudes pure_squeezed_state(double n_ph);

/// Diagonalizes the {g, e} block of a state without one-photon coherences.
/// Throws kNotApplicable if |rho_es| or |rho_sg| exceeds 1e-12.
EigenDecomposition entangled_eigenstates(const DickeState& rho);

/// Rebuilds the 3x3 density matrix from a decomposition.
ComplexMatrix reconstruct(const EigenDecomposition& d);

}  // namespace dicke
