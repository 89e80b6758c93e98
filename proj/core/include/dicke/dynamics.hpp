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

// Master equation for two collectively damped atoms driven on resonance by a
// coherent field (Rabi frequency omega) and a broadband squeezed vacuum
// (photon number N, two-photon correlation M), in the interaction picture:
//
//   drho/dt = i[H, rho]
//           - G(N+1)/2 (S+S- rho + rho S+S- - 2 S- rho S+)
//           - G N/2    (S-S+ rho + rho S-S+ - 2 S+ rho S-)
//           - G M/2    (S+S+ rho + rho S+S+ - 2 S+ rho S+)
//           - G M*/2   (S-S- rho + rho S-S- - 2 S- rho S-)
//
// with H = -i (omega/2)(S+ - S-). With this sign of the M terms the
// squeezed-only steady state has rho_eg = -M / ((2N+1)(3N^2+3N+1-3|M|^2)),
// so the phase phi_s = pi (M < 0) gives positive two-photon coherence.
//
// Rates are in units of gamma when gamma = 1 (the default) and times in
// 1/gamma. Detunings are zero.

#include "dicke/model.hpp"
#include "dicke/numerics.hpp"

#include <functional>

namespace dicke {

enum class CorrelationBound {
  kQuantum,    // |M|^2 <= N(N+1)
  kClassical,  // additionally |M| <= N
};

struct SystemParams {
  double omega = 0.0;
  double gamma = 1.0;
  double n_ph = 0.0;
  Complex m_corr{};
  CorrelationBound bound = CorrelationBound::kQuantum;
};

/// Throws kBoundViolation if `p` is unphysical. The quantum bound is checked
/// with a relative slack of 1e-12 so that M = sqrt(N(N+1)) round-trips.
void validate(const SystemParams& p);

inline constexpr std::size_t kLiouvilleDim = kDickeDim * kDickeDim;

/// Superoperator acting on column-stacked 3x3 density matrices.
class Liouvillian {
 public:
  Liouvillian(ComplexMatrix matrix, SystemParams params)
      : matrix_(std::move(matrix)), params_(params) {}

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const SystemParams& params() const noexcept { return params_; }

  /// drho/dt for an arbitrary 3x3 matrix.
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  ComplexMatrix matrix_;
  SystemParams params_;
};

Liouvillian build_liouvillian(const SystemParams& p);

/// Max-entry norm of L vec(rho).
double stationarity_residual(const Liouvillian& L, const DickeState& rho);

/// Unique stationary state: trace-normalized, Hermitized null vector of L.
DickeState steady_state(const Liouvillian& L);

using StepObserver = std::function<void(double t, const ComplexMatrix& rho)>;

/// Fixed-step classical RK4 integration of drho/dt = L rho from t = 0 to
/// t_final. The step is shrunk slightly so that t_final is hit exactly.
/// Throws kIntegrationFailure when the trace, entry bound or positivity
/// drift beyond 1e-9, which happens when dt is too large for the rates.
DickeState propagate(const DickeState& rho0, const SystemParams& p, double t_final,
                     double dt = 1e-3, const StepObserver& observer = {});

}  // namespace dicke
