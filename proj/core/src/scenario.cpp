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

#include "dicke/scenario.hpp"

#include "dicke/analytic.hpp"
#include "dicke/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

namespace dicke {

std::string_view to_string(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::kClassicalSqueezed: return "classical-squeezed";
    case ScenarioKind::kQuantumSqueezed: return "quantum-squeezed";
    case ScenarioKind::kCoherent: return "coherent";
    case ScenarioKind::kCombined: return "combined";
  }
  return "unknown";
}

std::string_view to_string(SolverKind kind) noexcept {
  switch (kind) {
    case SolverKind::kAnalytic: return "analytic";
    case SolverKind::kNumeric: return "numeric";
    case SolverKind::kBoth: return "both";
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario(std::string_view name) noexcept {
  for (auto k : {ScenarioKind::kClassicalSqueezed, ScenarioKind::kQuantumSqueezed,
                 ScenarioKind::kCoherent, ScenarioKind::kCombined})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::optional<SolverKind> parse_solver(std::string_view name) noexcept {
  for (auto k : {SolverKind::kAnalytic, SolverKind::kNumeric, SolverKind::kBoth})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::string_view sweep_variable(ScenarioKind kind) noexcept {
  return kind == ScenarioKind::kClassicalSqueezed || kind == ScenarioKind::kQuantumSqueezed
             ? "n_ph"
             : "omega";
}

bool has_closed_form(ScenarioKind kind) noexcept { return kind != ScenarioKind::kCombined; }

double correlation_for(CorrelationMode mode, double n_ph, double m_sign, double m_value) {
  const double sign = m_sign < 0.0 ? -1.0 : 1.0;
  switch (mode) {
    case CorrelationMode::kClassical: return sign * n_ph;
    case CorrelationMode::kQuantum: return sign * std::sqrt(n_ph * (n_ph + 1.0));
    case CorrelationMode::kCustom: return m_value;
  }
  return 0.0;
}

SystemParams params_at(const Scenario& s, double x) {
  SystemParams p;
  switch (s.kind) {
    case ScenarioKind::kClassicalSqueezed:
      p.n_ph = x;
      p.m_corr = correlation_for(CorrelationMode::kClassical, x, s.m_sign, 0.0);
      p.bound = CorrelationBound::kClassical;
      break;
    case ScenarioKind::kQuantumSqueezed:
      p.n_ph = x;
      p.m_corr = correlation_for(CorrelationMode::kQuantum, x, s.m_sign, 0.0);
      break;
    case ScenarioKind::kCoherent:
      p.omega = x;
      break;
    case ScenarioKind::kCombined:
      p.omega = x;
      p.n_ph = s.n_ph;
      p.m_corr = correlation_for(s.m_mode, s.n_ph, s.m_sign, s.m_value);
      if (s.m_mode == CorrelationMode::kClassical) p.bound = CorrelationBound::kClassical;
      break;
  }
  validate(p);
  return p;
}

std::vector<double> Grid::points() const {
  if (steps < 2) throw Error(ErrorKind::kInvalidInput, "grid needs at least 2 steps");
  if (!std::isfinite(start) || !std::isfinite(stop))
    throw Error(ErrorKind::kInvalidInput, "grid ends must be finite");
  std::vector<double> xs(steps);
  const double span = stop - start;
  for (std::size_t i = 0; i < steps; ++i)
    xs[i] = start + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  xs.back() = stop;
  return xs;
}

SweepRow make_row(double param, const DickeState& rho) {
  const auto sq = squeezing_parameters(rho);
  const auto ent = negativity(rho);
  SweepRow r;
  r.param = param;
  r.rho_ee = rho.ee();
  r.rho_ss = rho.ss();
  r.rho_eg = rho.eg().real();
  r.rho_gg = rho.gg();
  r.rho_es = rho.es().real();
  r.rho_sg = rho.sg().real();
  r.alpha = sq.alpha;
  r.xi_s_n1 = sq.xi_s_n1;
  r.xi_s_n2 = sq.xi_s_n2;
  r.xi_r_n1 = sq.xi_r_n1;
  r.xi_r_n2 = sq.xi_r_n2;
  r.measure_e = ent.measure_e;
  r.pt_min_eigenvalue = ent.pt_min_eigenvalue();
  return r;
}

DickeState solve_steady_state(const SystemParams& p, SolverKind solver) {
  switch (solver) {
    case SolverKind::kAnalytic: return analytic_steady_state(p);
    case SolverKind::kNumeric: return steady_state(build_liouvillian(p));
    case SolverKind::kBoth: {
      auto analytic = analytic_steady_state(p);
      auto numeric = steady_state(build_liouvillian(p));
      const double diff = (analytic.matrix() - numeric.matrix()).max_abs();
      if (diff > 1e-9) {
        std::ostringstream os;
        os << "analytic and numeric steady states differ by " << diff;
        throw Error(ErrorKind::kConsistency, os.str());
      }
      return numeric;
    }
  }
  throw Error(ErrorKind::kInvalidInput, "unknown solver");
}

std::vector<SweepRow> run_scenario_sweep(const Scenario& s, const Grid& grid, SolverKind solver,
                                         const SweepOptions& options) {
  if (solver != SolverKind::kNumeric && !has_closed_form(s.kind)) {
    std::ostringstream os;
    os << "solver '" << to_string(solver) << "' is not available for scenario '"
       << to_string(s.kind) << "' (no closed form); use --solver numeric";
    throw Error(ErrorKind::kNotApplicable, os.str());
  }
  const auto xs = grid.points();
  std::vector<SystemParams> params;
  params.reserve(xs.size());
  for (double x : xs) params.push_back(params_at(s, x));

  std::vector<SweepRow> rows(xs.size());
  std::vector<std::exception_ptr> errors(xs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) {
      try {
        rows[i] = make_row(xs[i], solve_steady_state(params[i], solver));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(xs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Consistency failures are collected so the report names every bad point;
  // anything else is rethrown for the first failing point in grid order.
  std::ostringstream mismatches;
  std::size_t mismatch_count = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kConsistency) throw;
      mismatches << "\n  " << sweep_variable(s.kind) << " = " << xs[i] << ": " << e.what();
      ++mismatch_count;
    }
  }
  if (mismatch_count > 0) {
    std::ostringstream os;
    os << mismatch_count << " grid point(s) failed consistency checks:" << mismatches.str();
    throw Error(ErrorKind::kConsistency, os.str());
  }
  return rows;
}

double find_threshold(const Scenario& s, double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    throw Error(ErrorKind::kInvalidInput, "threshold bracket must satisfy lo < hi");
  const SolverKind solver = has_closed_form(s.kind) ? SolverKind::kAnalytic : SolverKind::kNumeric;
  const auto entangled = [&](double x) {
    return negativity(solve_steady_state(params_at(s, x), solver)).measure_e > 0.0;
  };
  const bool at_lo = entangled(lo);
  if (at_lo == entangled(hi)) {
    std::ostringstream os;
    os << "no entanglement onset in [" << lo << ", " << hi << "]: E is "
       << (at_lo ? "positive" : "zero") << " at both ends";
    throw Error(ErrorKind::kInvalidInput, os.str());
  }
  while (hi - lo >= 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (entangled(mid) == at_lo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

FigurePreset figure_preset(int figure) {
  constexpr std::size_t kPoints = 300;
  FigurePreset f;
  switch (figure) {
    case 1:
      f.scenario.kind = ScenarioKind::kClassicalSqueezed;
      f.grid = {0.01, 2.0, kPoints};
      break;
    case 2:
      f.scenario.kind = ScenarioKind::kQuantumSqueezed;
      f.grid = {0.01, 10.0, kPoints};
      break;
    case 3:
      f.scenario.kind = ScenarioKind::kCoherent;
      f.grid = {0.01, 3.0, kPoints};
      break;
    case 4:
      f.scenario.kind = ScenarioKind::kCombined;
      f.scenario.n_ph = 0.1;
      f.scenario.m_mode = CorrelationMode::kQuantum;
      f.scenario.m_sign = -1.0;
      f.grid = {0.01, 3.0, kPoints};
      f.solver = SolverKind::kNumeric;
      break;
    default: {
      std::ostringstream os;
      os << "unknown figure " << figure << " (expected 1-4)";
      throw Error(ErrorKind::kInvalidInput, os.str());
    }
  }
  return f;
}

}  // namespace dicke
