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

#include "dicke_tools/cli.hpp"

#include "dicke/analytic.hpp"
#include "dicke/error.hpp"
#include "dicke/scenario.hpp"
#include "dicke/self_check.hpp"
#include "dicke_tools/sweep_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>

namespace dicke::cli {
namespace {

struct Options {
  std::string scenario;
  std::optional<double> start, stop, omega, n_ph, m_value;
  std::optional<std::size_t> steps;
  std::optional<std::string> m_mode, m_sign, solver;
  std::string format = "csv";
  std::string output;
  unsigned threads = 1;
  int figure = 0;
};

const std::map<std::string, CorrelationMode> kModes = {{"classical", CorrelationMode::kClassical},
                                                       {"quantum", CorrelationMode::kQuantum},
                                                       {"custom", CorrelationMode::kCustom}};

const std::vector<std::string> kScenarioNames = {"classical-squeezed", "quantum-squeezed",
                                                 "coherent", "combined"};

void usage_error(const std::string& what) { throw Error(ErrorKind::kInvalidInput, what); }

void add_scenario(CLI::App& cmd, Options& o, bool required) {
  auto* opt = cmd.add_option("--scenario", o.scenario, "Scenario to solve")
                  ->check(CLI::IsMember(kScenarioNames));
  if (required) opt->required();
}

void add_correlation(CLI::App& cmd, Options& o) {
  cmd.add_option("--n-ph", o.n_ph, "Squeezed-bath photon number N (combined drive)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--m-mode", o.m_mode, "How M follows N")->check(CLI::IsMember({"classical", "quantum", "custom"}));
  cmd.add_option("--m-sign", o.m_sign, "Sign of M; '-' gives positive rho_eg")
      ->check(CLI::IsMember({"+", "-"}));
  cmd.add_option("--m-value", o.m_value, "Signed M for --m-mode custom");
}

void add_output(CLI::App& cmd, Options& o) {
  cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--output", o.output, "Write data to this file instead of stdout");
}

void add_solver(CLI::App& cmd, Options& o) {
  cmd.add_option("--solver", o.solver, "Steady-state solver")
      ->check(CLI::IsMember({"analytic", "numeric", "both"}));
}

Scenario build_scenario(const Options& o) {
  Scenario s;
  s.kind = *parse_scenario(o.scenario);
  const bool combined = s.kind == ScenarioKind::kCombined;
  if (!combined && (o.n_ph || o.m_mode || o.m_value))
    usage_error("--n-ph, --m-mode and --m-value apply only to --scenario combined");
  if (s.kind == ScenarioKind::kCoherent && o.m_sign)
    usage_error("--m-sign does not apply to --scenario coherent");
  if (o.omega) usage_error("--omega is the sweep variable here; use --start/--stop");
  if (o.m_sign) s.m_sign = *o.m_sign == "-" ? -1.0 : 1.0;
  if (combined) {
    s.n_ph = o.n_ph.value_or(0.1);
    s.m_mode = kModes.at(o.m_mode.value_or("quantum"));
    if (s.m_mode == CorrelationMode::kCustom) {
      if (!o.m_value) usage_error("--m-mode custom requires --m-value");
      s.m_value = *o.m_value;
    } else if (o.m_value) {
      usage_error("--m-value requires --m-mode custom");
    }
  }
  return s;
}

SolverKind pick_solver(const Options& o, bool closed_form) {
  if (o.solver) return *parse_solver(*o.solver);
  return closed_form ? SolverKind::kAnalytic : SolverKind::kNumeric;
}

Grid default_grid(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kClassicalSqueezed: return figure_preset(1).grid;
    case ScenarioKind::kQuantumSqueezed: return figure_preset(2).grid;
    case ScenarioKind::kCoherent: return figure_preset(3).grid;
    case ScenarioKind::kCombined: return figure_preset(4).grid;
  }
  return {};
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) usage_error("cannot open output file '" + path + "'");
    out_ = &file_;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

io::Format format_of(const Options& o) { return *io::parse_format(o.format); }

int do_sweep(const Options& o, std::ostream& out) {
  const Scenario s = build_scenario(o);
  Grid g = default_grid(s.kind);
  if (o.start) g.start = *o.start;
  if (o.stop) g.stop = *o.stop;
  if (o.steps) g.steps = *o.steps;
  const auto rows =
      run_scenario_sweep(s, g, pick_solver(o, has_closed_form(s.kind)), {o.threads});
  Sink sink(o.output, out);
  io::write_rows(sink.stream(), rows, format_of(o));
  return kOk;
}

int do_figure(const Options& o, std::ostream& out) {
  const FigurePreset f = figure_preset(o.figure);
  const SolverKind solver = o.solver ? *parse_solver(*o.solver) : f.solver;
  const auto rows = run_scenario_sweep(f.scenario, f.grid, solver, {o.threads});
  Sink sink(o.output, out);
  io::write_rows(sink.stream(), rows, format_of(o));
  return kOk;
}

int do_threshold(const Options& o, std::ostream& out) {
  const Scenario s = build_scenario(o);
  double lo = 0.0, hi = 0.0;
  switch (s.kind) {
    case ScenarioKind::kClassicalSqueezed: lo = 0.1, hi = 1.0; break;
    case ScenarioKind::kQuantumSqueezed: lo = 0.01, hi = 10.0; break;
    case ScenarioKind::kCoherent: lo = 1.0, hi = 2.0; break;
    case ScenarioKind::kCombined: lo = 1.5, hi = 3.0; break;
  }
  lo = o.start.value_or(lo);
  hi = o.stop.value_or(hi);
  const double x = find_threshold(s, lo, hi);
  Sink sink(o.output, out);
  auto& os = sink.stream();
  const std::string var(sweep_variable(s.kind));
  if (format_of(o) == io::Format::kCsv)
    os << "scenario,variable,threshold\n"
       << o.scenario << ',' << var << ',' << io::format_number(x) << '\n';
  else
    os << "{\"scenario\":\"" << o.scenario << "\",\"variable\":\"" << var
       << "\",\"threshold\":" << io::format_number(x) << "}\n";
  return kOk;
}

int do_state(const Options& o, std::ostream& out) {
  SystemParams p;
  p.omega = o.omega.value_or(0.0);
  p.n_ph = o.n_ph.value_or(0.0);
  const auto mode = kModes.at(o.m_mode.value_or("quantum"));
  if (mode == CorrelationMode::kCustom && !o.m_value)
    usage_error("--m-mode custom requires --m-value");
  if (mode != CorrelationMode::kCustom && o.m_value)
    usage_error("--m-value requires --m-mode custom");
  const double sign = o.m_sign.value_or("-") == "-" ? -1.0 : 1.0;
  p.m_corr = correlation_for(mode, p.n_ph, sign, o.m_value.value_or(0.0));
  if (mode == CorrelationMode::kClassical) p.bound = CorrelationBound::kClassical;
  validate(p);
  const bool closed_form = p.omega == 0.0 || p.n_ph == 0.0;
  const DickeState rho = solve_steady_state(p, pick_solver(o, closed_form));
  Sink sink(o.output, out);
  io::write_state(sink.stream(), p, make_row(0.0, rho), format_of(o));
  return kOk;
}

int do_check(const Options& o, std::ostream& out) {
  const auto report = self_check();
  Sink sink(o.output, out);
  auto& os = sink.stream();
  for (const auto& c : report.checks) {
    os << (c.passed ? "ok    " : "FAILED") << "  " << c.name << "  residual "
       << std::setprecision(3) << c.max_residual << " (tol " << c.tolerance << ")";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  const bool ok = report.all_passed();
  os << (ok ? "all checks passed" : "self-check failed") << '\n';
  return ok ? kOk : kNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady states, spin squeezing and entanglement of two atoms in a squeezed vacuum",
               "dicke"};
  app.require_subcommand(1);
  Options o;

  auto* sweep = app.add_subcommand("sweep", "Tabulate a scenario over a grid");
  add_scenario(*sweep, o, true);
  sweep->add_option("--start", o.start, "First grid value");
  sweep->add_option("--stop", o.stop, "Last grid value");
  sweep->add_option("--steps", o.steps, "Number of grid points (>= 2)");
  sweep->add_option("--omega", o.omega, "Not valid here; omega is swept");
  add_correlation(*sweep, o);
  add_solver(*sweep, o);
  add_output(*sweep, o);
  sweep->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* figure = app.add_subcommand("figure", "Preset sweep for one of the four figures");
  figure->add_option("figure", o.figure, "Figure number")->required()->check(CLI::Range(1, 4));
  add_solver(*figure, o);
  add_output(*figure, o);
  figure->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* threshold = app.add_subcommand("threshold", "Locate the entanglement onset by bisection");
  add_scenario(*threshold, o, true);
  threshold->add_option("--start", o.start, "Lower end of the bracket");
  threshold->add_option("--stop", o.stop, "Upper end of the bracket");
  threshold->add_option("--omega", o.omega, "Not valid here; omega is searched");
  add_correlation(*threshold, o);
  add_output(*threshold, o);

  auto* check = app.add_subcommand("check", "Run every cross-validation; exit 2 on failure");
  check->add_option("--output", o.output, "Write the report to this file");

  auto* state = app.add_subcommand("state", "Print one steady state");
  state->add_option("--omega", o.omega, "Rabi frequency in units of gamma")
      ->check(CLI::NonNegativeNumber);
  add_correlation(*state, o);
  add_solver(*state, o);
  add_output(*state, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sweep) return do_sweep(o, out);
    if (*figure) return do_figure(o, out);
    if (*threshold) return do_threshold(o, out);
    if (*check) return do_check(o, out);
    if (*state) return do_state(o, out);
  } catch (const Error& e) {
    err << "dicke: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.is_usage_error() ? kUsage : kNumerical;
  } catch (const std::exception& e) {
    err << "dicke: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace dicke::cli
