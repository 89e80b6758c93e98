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

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace dicke {
namespace {

TEST(SteadySqueezed, Examples) {
  EXPECT_NEAR(steady_squeezed(0, 0).gg(), 1.0, 0.0);

  const auto c = steady_squeezed(0.25, -0.25);
  EXPECT_NEAR(c.ee(), 1.0 / 21, 1e-15);
  EXPECT_NEAR(c.ss(), 1.0 / 7, 1e-15);
  EXPECT_NEAR(c.eg().real(), 2.0 / 21, 1e-15);
  EXPECT_NEAR(c.gg(), 17.0 / 21, 1e-15);
  // Flipping the sign of M only flips the two-photon coherence.
  EXPECT_NEAR(steady_squeezed(0.25, 0.25).eg().real(), -2.0 / 21, 1e-15);

  const auto q = steady_squeezed(1, -std::sqrt(2.0));
  EXPECT_NEAR(q.ee(), 1.0 / 3, 1e-15);
  EXPECT_NEAR(q.ss(), 0.0, 1e-15);
  EXPECT_NEAR(q.eg().real(), std::sqrt(2.0) / 3, 1e-15);
  EXPECT_NEAR(q.purity(), 1.0, 1e-14);
}

TEST(SteadySqueezed, MatchesOracleAndRejectsBounds) {
  for (double n = 0.05; n <= 3.0; n += 0.05)
    for (double m : {n, -n, 0.3 * n, std::sqrt(n * (n + 1)), -std::sqrt(n * (n + 1))}) {
      const auto o = oracle::squeezed(n, m);
      const auto rho = steady_squeezed(n, m);
      EXPECT_NEAR(rho.ee(), o.ee, 1e-14);
      EXPECT_NEAR(rho.ss(), o.ss, 1e-14);
      EXPECT_NEAR(rho.eg().real(), o.eg, 1e-14);
    }
  EXPECT_THROW(steady_squeezed(1, 2), Error);
  EXPECT_THROW(steady_squeezed(-1, 0), Error);
}

TEST(SteadyCoherent, Examples) {
  EXPECT_NEAR(steady_coherent(0).gg(), 1.0, 0.0);
  const auto c = steady_coherent(1);
  const double r2 = std::sqrt(2.0);
  EXPECT_NEAR(c.ee(), 1.0 / 11, 1e-15);
  EXPECT_NEAR(c.ss(), 3.0 / 11, 1e-15);
  EXPECT_NEAR(c.sg().real(), 3 * r2 / 11, 1e-15);
  EXPECT_NEAR(c.es().real(), r2 / 11, 1e-15);
  EXPECT_NEAR(c.eg().real(), 2.0 / 11, 1e-15);
  const auto big = steady_coherent(1e4);
  EXPECT_NEAR(big.ee(), 1.0 / 3, 1e-6);
  EXPECT_NEAR(big.ss(), 1.0 / 3, 1e-6);
  EXPECT_NEAR(big.gg(), 1.0 / 3, 1e-6);
  EXPECT_LT(std::abs(big.eg()) + std::abs(big.sg()) + std::abs(big.es()), 1e-3);
  EXPECT_THROW(steady_coherent(-1), Error);
}

TEST(AnalyticSteadyState, DispatchAndScope) {
  SystemParams p;
  p.omega = 2;
  p.gamma = 2;
  EXPECT_NEAR(analytic_steady_state(p).ee(), 1.0 / 11, 1e-15);
  SystemParams both{1, 1, 0.1, -0.1};
  try {
    analytic_steady_state(both);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotApplicable);
  }
  SystemParams complex_m{0, 1, 0.5, Complex(0, 0.5)};
  EXPECT_THROW(analytic_steady_state(complex_m), Error);
}

TEST(PureSqueezedState, MatchesSteadyState) {
  for (double n : {0.0, 0.3, 1.0, 7.0}) {
    const auto a = pure_squeezed_state(n);
    const auto rho = steady_squeezed(n, -std::sqrt(n * (n + 1)));
    EXPECT_NEAR(std::norm(a.g) + std::norm(a.e), 1.0, 1e-15);
    EXPECT_NEAR(std::norm(a.e), rho.ee(), 1e-14);
    EXPECT_NEAR((a.e * std::conj(a.g)).real(), rho.eg().real(), 1e-14);
  }
}

TEST(EntangledEigenstates, Diagonal) {
  const auto rho = DickeState::from_real_elements({0.2, 0.1, 0.7, 0, 0, 0});
  const auto d = entangled_eigenstates(rho);
  EXPECT_NEAR(d.pi_plus, 0.7, 1e-15);
  EXPECT_NEAR(d.pi_minus, 0.2, 1e-15);
  EXPECT_NEAR(std::abs(d.psi_plus.g), 1.0, 1e-15);
  EXPECT_NEAR(d.residual_population, 0.1, 1e-15);
}

TEST(EntangledEigenstates, DegenerateChoosesBareStates) {
  const auto d = entangled_eigenstates(DickeState::from_real_elements({0.4, 0.2, 0.4, 0, 0, 0}));
  EXPECT_EQ(d.psi_plus.g, Complex(1));
  EXPECT_EQ(d.psi_minus.e, Complex(1));
}

TEST(EntangledEigenstates, QuantumSqueezedIsPure) {
  const auto d = entangled_eigenstates(steady_squeezed(1, -std::sqrt(2.0)));
  EXPECT_NEAR(d.pi_plus, 1.0, 1e-12);
  EXPECT_NEAR(d.pi_minus, 0.0, 1e-12);
  EXPECT_NEAR(d.psi_plus.g.real(), std::sqrt(2.0 / 3), 1e-10);
  EXPECT_NEAR(d.psi_plus.e.real(), std::sqrt(1.0 / 3), 1e-10);
}

TEST(EntangledEigenstates, ClassicalPopulationsAndReconstruction) {
  const auto rho = steady_squeezed(0.25, -0.25);
  const auto d = entangled_eigenstates(rho);
  const auto pi = oracle::pi_pm(rho.ee(), rho.eg().real(), rho.gg());
  EXPECT_NEAR(d.pi_plus, pi[0], 1e-14);
  EXPECT_NEAR(d.pi_minus, pi[1], 1e-14);
  EXPECT_NEAR(d.pi_plus, 0.8212, 1e-4);
  EXPECT_NEAR(d.pi_minus, 0.0359, 1e-4);
  EXPECT_NEAR(d.residual_population, 1.0 / 7, 1e-15);
  const Complex overlap = std::conj(d.psi_plus.g) * d.psi_minus.g + std::conj(d.psi_plus.e) * d.psi_minus.e;
  EXPECT_LT(std::abs(overlap), 1e-10);
  EXPECT_LT((reconstruct(d) - rho.matrix()).max_abs(), 1e-12);
}

TEST(EntangledEigenstates, RequiresNoOnePhotonCoherence) {
  try {
    entangled_eigenstates(steady_coherent(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotApplicable);
  }
}

TEST(SteadySqueezed, QuantumFamilyIsPureForAllN) {
  for (double n = 0; n <= 100; n += 0.5)
    EXPECT_NEAR(steady_squeezed(n, std::sqrt(n * (n + 1))).purity(), 1.0, 1e-10) << n;
}

}  // namespace
}  // namespace dicke
