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

// Named driving scenarios, parameter sweeps and threshold search.
//
// Squeezed-field presets take |M| from the scenario (M = N for a classical
// field, |M| = sqrt(N(N+1)) for a quantum one) and its sign from `m_sign`.
// The default m_sign = -1 (phase pi) is the one that yields positive
// two-photon coherence rho_eg; at omega = 0 the sign is a pure phase choice
// and E, populations and the squeezing magnitudes do not depend on it.

#include "dicke/dynamics.hpp"
#include "dicke/measures.hpp"
#include "dicke/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dicke {

enum class ScenarioKind { kClassicalSqueezed, kQuantumSqueezed, kCoherent, kCombined };
enum class CorrelationMode { kClassical, kQuantum, kCustom };
enum class SolverKind { kAnalytic, kNumeric, kBoth };

std::string_view to_string(ScenarioKind kind) noexcept;
std::string_view to_string(SolverKind kind) noexcept;
std::optional<ScenarioKind> parse_scenario(std::string_view name) noexcept;
std::optional<SolverKind> parse_solver(std::string_view name) noexcept;

struct Scenario {
  ScenarioKind kind = ScenarioKind::kClassicalSqueezed;
  double m_sign = -1.0;
  // Combined drive only; the sweep variable is omega.
  double n_ph = 0.0;
  CorrelationMode m_mode = CorrelationMode::kQuantum;
  double m_value = 0.0;  // signed M for kCustom
};

/// Name of the swept quantity: "n_ph" for squeezed-only scenarios, "omega"
/// otherwise.
std::string_view sweep_variable(ScenarioKind kind) noexcept;

/// Parameters at sweep value `x` (N or omega/gamma). Validated.
SystemParams params_at(const Scenario& s, double x);

/// Signed M for photon number `n_ph` under a correlation mode.
double correlation_for(CorrelationMode mode, double n_ph, double m_sign, double m_value);

bool has_closed_form(ScenarioKind kind) noexcept;

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 2;

  /// Evenly spaced points, both ends included. Throws kInvalidInput if
  /// steps < 2 or an end is not finite.
  std::vector<double> points() const;
};

struct SweepRow {
  double param = 0.0;
  double rho_ee = 0.0;
  double rho_ss = 0.0;
  double rho_eg = 0.0;
  double rho_gg = 0.0;
  double rho_es = 0.0;
  double rho_sg = 0.0;
  double alpha = 0.0;
  double xi_s_n1 = 0.0;
  double xi_s_n2 = 0.0;
  double xi_r_n1 = 0.0;
  double xi_r_n2 = 0.0;
  double measure_e = 0.0;
  double pt_min_eigenvalue = 0.0;
};

SweepRow make_row(double param, const DickeState& rho);

/// Steady state for one parameter point. kBoth solves twice and throws
/// kConsistency if any element differs by more than 1e-9.
DickeState solve_steady_state(const SystemParams& p, SolverKind solver);

struct SweepOptions {
  unsigned threads = 1;  // grid points are independent; 0 = hardware concurrency
};

/// Rows in grid order. Every grid point is validated before any solving.
/// With kBoth, mismatching points are collected and reported together.
std::vector<SweepRow> run_scenario_sweep(const Scenario& s, const Grid& grid, SolverKind solver,
                                         const SweepOptions& options = {});

/// Sweep value in [lo, hi] where E switches between zero and positive,
/// found by bisection to a bracket narrower than 1e-6. Uses the closed form
/// when the scenario has one. Throws kInvalidInput if the ends agree.
double find_threshold(const Scenario& s, double lo, double hi);

/// Presets for the four standard sweeps (figure 1..4).
struct FigurePreset {
  Scenario scenario;
  Grid grid;
  SolverKind solver = SolverKind::kAnalytic;
};

/// figure in 1..4; throws kInvalidInput otherwise.
FigurePreset figure_preset(int figure);

}  // namespace dicke
