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

#include "dicke/dynamics.hpp"

#include "dicke/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dicke {

namespace {

constexpr double kDriftTol = 1e-9;

// Superoperator of X -> A X B under column stacking.
ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b) {
  return kron(b.transpose(), a);
}

// Superoperator of X -> c (a X + X a - 2 left X right).
ComplexMatrix dissipator(Complex c, const ComplexMatrix& a, const ComplexMatrix& left,
                         const ComplexMatrix& right) {
  const auto id = ComplexMatrix::identity(kDickeDim);
  ComplexMatrix d = sandwich(a, id) + sandwich(id, a) - 2.0 * sandwich(left, right);
  return c * d;
}

}  // namespace

void validate(const SystemParams& p) {
  std::ostringstream os;
  const auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(p.omega) || !finite(p.gamma) || !finite(p.n_ph) || !finite(p.m_corr.real()) ||
      !finite(p.m_corr.imag())) {
    throw Error(ErrorKind::kBoundViolation, "SystemParams: non-finite parameter");
  }
  if (p.gamma <= 0.0) {
    os << "SystemParams: gamma must be positive (got " << p.gamma << ")";
    throw Error(ErrorKind::kBoundViolation, os.str());
  }
  if (p.omega < 0.0) {
    os << "SystemParams: omega must be non-negative (got " << p.omega << ")";
    throw Error(ErrorKind::kBoundViolation, os.str());
  }
  if (p.n_ph < 0.0) {
    os << "SystemParams: photon number N must be non-negative (got " << p.n_ph << ")";
    throw Error(ErrorKind::kBoundViolation, os.str());
  }
  const double m2 = std::norm(p.m_corr);
  const double quantum = p.n_ph * (p.n_ph + 1.0);
  if (m2 > quantum * (1.0 + 1e-12) + 1e-300) {
    os << "SystemParams: |M|^2 = " << m2 << " exceeds N(N+1) = " << quantum;
    throw Error(ErrorKind::kBoundViolation, os.str());
  }
  if (p.bound == CorrelationBound::kClassical && std::abs(p.m_corr) > p.n_ph * (1.0 + 1e-12)) {
    os << "SystemParams: classical field requires |M| <= N (|M| = " << std::abs(p.m_corr)
       << ", N = " << p.n_ph << ")";
    throw Error(ErrorKind::kBoundViolation, os.str());
  }
}

ComplexMatrix Liouvillian::apply(const ComplexMatrix& rho) const {
  const auto v = vectorize(rho);
  const auto dv = matrix_ * std::span<const Complex>(v);
  return devectorize(dv, rho.rows(), rho.cols());
}

Liouvillian build_liouvillian(const SystemParams& p) {
  validate(p);
  const auto& ops = collective_operators();
  const auto& sp = ops.s_plus;
  const auto& sm = ops.s_minus;
  const auto id = ComplexMatrix::identity(kDickeDim);
  const Complex i{0.0, 1.0};
  const double g = p.gamma;

  const ComplexMatrix h = Complex(0.0, -0.5 * p.omega) * (sp - sm);
  ComplexMatrix L = i * (sandwich(h, id) - sandwich(id, h));
  L += dissipator(-0.5 * g * (p.n_ph + 1.0), sp * sm, sm, sp);
  L += dissipator(-0.5 * g * p.n_ph, sm * sp, sp, sm);
  L += dissipator(-0.5 * g * p.m_corr, sp * sp, sp, sp);
  L += dissipator(-0.5 * g * std::conj(p.m_corr), sm * sm, sm, sm);
  return Liouvillian(std::move(L), p);
}

double stationarity_residual(const Liouvillian& L, const DickeState& rho) {
  const auto v = vectorize(rho.matrix());
  return max_abs(L.matrix() * std::span<const Complex>(v));
}

DickeState steady_state(const Liouvillian& L) {
  const auto v = null_vector(L.matrix(), 1e-10);
  ComplexMatrix rho = devectorize(v, kDickeDim, kDickeDim);
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-8)
    throw Error(ErrorKind::kNoSteadyState, "null vector of the Liouvillian is traceless");
  rho *= 1.0 / tr;
  rho = 0.5 * (rho + rho.adjoint());
  auto state = DickeState::from_matrix(std::move(rho));

  const double residual = stationarity_residual(L, state);
  const double scale = std::max(1.0, L.matrix().max_abs());
  if (residual > 1e-10 * scale) {
    std::ostringstream os;
    os << "steady state residual " << residual << " exceeds tolerance";
    throw Error(ErrorKind::kConsistency, os.str());
  }
  return state;
}

DickeState propagate(const DickeState& rho0, const SystemParams& p, double t_final, double dt,
                     const StepObserver& observer) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw Error(ErrorKind::kInvalidInput, "propagate: dt must be positive");
  if (!(t_final >= 0.0) || !std::isfinite(t_final))
    throw Error(ErrorKind::kInvalidInput, "propagate: t_final must be non-negative");

  const auto L = build_liouvillian(p);
  const auto& m = L.matrix();
  const auto steps = static_cast<std::size_t>(std::max(0.0, std::ceil(t_final / dt - 1e-9)));
  const double h = steps == 0 ? 0.0 : t_final / static_cast<double>(steps);

  auto fail = [&](double t, const std::string& what) {
    std::ostringstream os;
    os << "integration failed at t = " << t << ": " << what << "; try a smaller dt (now " << dt
       << ")";
    throw Error(ErrorKind::kIntegrationFailure, os.str());
  };

  ComplexVector x = vectorize(rho0.matrix());
  ComplexVector tmp(x.size());
  if (observer) observer(0.0, rho0.matrix());
  for (std::size_t step = 1; step <= steps; ++step) {
    const auto k1 = m * std::span<const Complex>(x);
    for (std::size_t k = 0; k < x.size(); ++k) tmp[k] = x[k] + 0.5 * h * k1[k];
    const auto k2 = m * std::span<const Complex>(tmp);
    for (std::size_t k = 0; k < x.size(); ++k) tmp[k] = x[k] + 0.5 * h * k2[k];
    const auto k3 = m * std::span<const Complex>(tmp);
    for (std::size_t k = 0; k < x.size(); ++k) tmp[k] = x[k] + h * k3[k];
    const auto k4 = m * std::span<const Complex>(tmp);
    for (std::size_t k = 0; k < x.size(); ++k)
      x[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);

    const double t = h * static_cast<double>(step);
    Complex tr{};
    for (std::size_t d = 0; d < kDickeDim; ++d) tr += x[d * kDickeDim + d];
    if (!std::isfinite(tr.real()) || std::abs(tr - 1.0) > kDriftTol) fail(t, "trace drift");
    // Entries of a unit-trace PSD matrix are bounded by 1.
    if (max_abs(x) > 1.0 + kDriftTol) fail(t, "entries left the physical range");
    if (observer) observer(t, devectorize(x, kDickeDim, kDickeDim));
  }

  ComplexMatrix rho = devectorize(x, kDickeDim, kDickeDim);
  if (rho.hermiticity_error() > 1e-10) fail(t_final, "hermiticity drift");
  rho = 0.5 * (rho + rho.adjoint());
  rho *= 1.0 / rho.trace();

  auto eig = hermitian_eigen(rho);
  if (eig.eigenvalues.front() < -kDriftTol) fail(t_final, "positivity drift");
  if (eig.eigenvalues.front() < 0.0) {
    // Clip rounding-level negative weight.
    ComplexMatrix clipped(kDickeDim, kDickeDim);
    double total = 0.0;
    for (std::size_t k = 0; k < kDickeDim; ++k) {
      const double w = std::max(0.0, eig.eigenvalues[k]);
      total += w;
      for (std::size_t r = 0; r < kDickeDim; ++r)
        for (std::size_t c = 0; c < kDickeDim; ++c)
          clipped(r, c) += w * eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
    }
    clipped *= 1.0 / total;
    rho = 0.5 * (clipped + clipped.adjoint());
  }
  return DickeState::from_matrix(std::move(rho));
}

}  // namespace dicke
