// Copyright 2026 The hjbgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: rollout, bound, oracle, sweep and repro.
//
// Exit codes: 0 success, 2 a loss exceeded its bound (or another soundness
// check failed), 1 any other error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hjbgap/bounds.hpp"
#include "hjbgap/controller.hpp"
#include "hjbgap/examples.hpp"
#include "hjbgap/io.hpp"
#include "hjbgap/oracle.hpp"
#include "hjbgap/simulate.hpp"
#include "hjbgap/sweep.hpp"

namespace {

using namespace hjbgap;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnsound = 2;

struct CommonArgs {
  std::string problem = "example1";
  std::vector<double> x0;
};

Vector initial_state(const ExampleSuite& suite, const std::vector<double>& x0) {
  if (x0.empty()) return suite.default_x0;
  if (static_cast<int>(x0.size()) != suite.problem.n) {
    throw InvalidArgument("--x0 needs " + std::to_string(suite.problem.n) +
                          " values");
  }
  Vector out(static_cast<int>(x0.size()));
  for (std::size_t i = 0; i < x0.size(); ++i) out(static_cast<int>(i)) = x0[i];
  return out;
}

NormGridSpec norm_grid(std::optional<int> grid_x, int grid_t, double R,
                       const CandidateValueFunction& J,
                       const CandidateValueFunction& vstar) {
  NormGridSpec grid;
  grid.time_points = grid_t;
  if (grid_x) {
    grid.state_points_per_axis = *grid_x;
    return grid;
  }
  auto finest = J.oscillation_wavelength();
  const auto other = vstar.oscillation_wavelength();
  if (!finest || (other && *other < *finest)) finest = other;
  return resolve_grid(grid, R, finest);
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

nlohmann::json vector_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (double x : v) out.push_back(x);
  return out;
}

std::vector<double> split_eps(const std::vector<std::string>& tokens) {
  std::vector<double> out;
  for (const auto& token : tokens) {
    std::stringstream ss(token);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw InvalidArgument("bad eps '" + item + "'");
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Controllers from approximate value functions: simulate, bound, verify"};
  app.require_subcommand(1);

  // rollout
  CommonArgs rollout_args;
  std::string rollout_vf = "vstar";
  double rollout_eps = 0.0;
  int rollout_steps = kDefaultSteps;
  std::string rollout_out;
  std::string rollout_traj;
  std::string rollout_argmin;
  int rollout_argmin_grid = 0;
  std::optional<int> rollout_grid_x;
  int rollout_grid_t = NormGridSpec{}.time_points;
  auto* rollout = app.add_subcommand("rollout", "Closed-loop rollout of u_J");
  rollout->add_option("--problem", rollout_args.problem, "Registered problem");
  rollout->add_option("--vf", rollout_vf, "Candidate family");
  rollout->add_option("--eps", rollout_eps, "Family parameter");
  rollout->add_option("--x0", rollout_args.x0, "Initial state");
  rollout->add_option("--steps", rollout_steps, "RK4 steps")->check(CLI::PositiveNumber);
  rollout->add_option("--out", rollout_out, "Result JSON (default stdout)");
  rollout->add_option("--traj", rollout_traj, "Trajectory CSV");
  rollout->add_option("--argmin", rollout_argmin, "grid, affine or finite")
      ->check(CLI::IsMember({"grid", "affine", "finite"}));
  rollout->add_option("--argmin-grid", rollout_argmin_grid, "Grid points per input axis")
      ->check(CLI::PositiveNumber);
  rollout->add_option("--grid-x", rollout_grid_x, "Norm grid points per state axis");
  rollout->add_option("--grid-t", rollout_grid_t, "Norm grid time points");

  // bound
  CommonArgs bound_args;
  std::string bound_vf = "vstar";
  double bound_eps = 0.0;
  std::optional<int> bound_grid_x;
  int bound_grid_t = NormGridSpec{}.time_points;
  std::string bound_out;
  auto* bound = app.add_subcommand("bound", "Performance bound of u_J");
  bound->add_option("--problem", bound_args.problem, "Registered problem");
  bound->add_option("--vf", bound_vf, "Candidate family");
  bound->add_option("--eps", bound_eps, "Family parameter");
  bound->add_option("--x0", bound_args.x0, "Initial state");
  bound->add_option("--grid-x", bound_grid_x, "Norm grid points per state axis");
  bound->add_option("--grid-t", bound_grid_t, "Norm grid time points");
  bound->add_option("--out", bound_out, "Report JSON (default stdout)");

  // oracle
  CommonArgs oracle_args;
  std::string oracle_mode = "inf";
  int oracle_nx = 2001;
  int oracle_nt = 2001;
  std::optional<double> oracle_x_min;
  std::optional<double> oracle_x_max;
  bool oracle_compare = false;
  auto* oracle = app.add_subcommand("oracle", "Backward DP value at (x0, 0)");
  oracle->add_option("--problem", oracle_args.problem, "Registered problem");
  oracle->add_option("--mode", oracle_mode, "inf or sup")
      ->check(CLI::IsMember({"inf", "sup"}));
  oracle->add_option("--x0", oracle_args.x0, "Initial state");
  oracle->add_option("--nx", oracle_nx, "State grid points");
  oracle->add_option("--nt", oracle_nt, "Time levels");
  oracle->add_option("--x-min", oracle_x_min, "Grid lower end");
  oracle->add_option("--x-max", oracle_x_max, "Grid upper end");
  oracle->add_flag("--compare", oracle_compare, "Also print the closed form");

  // sweep
  CommonArgs sweep_args;
  std::string sweep_family = "vstar";
  std::vector<std::string> sweep_eps;
  int sweep_steps = kDefaultSteps;
  std::optional<int> sweep_grid_x;
  int sweep_grid_t = NormGridSpec{}.time_points;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Loss and bounds over an eps sweep");
  sweep->add_option("--problem", sweep_args.problem, "Registered problem");
  sweep->add_option("--family", sweep_family, "Candidate family");
  sweep->add_option("--eps-list", sweep_eps, "eps values (space or comma separated)");
  sweep->add_option("--x0", sweep_args.x0, "Initial state");
  sweep->add_option("--steps", sweep_steps, "RK4 steps")->check(CLI::PositiveNumber);
  sweep->add_option("--grid-x", sweep_grid_x, "Norm grid points per state axis");
  sweep->add_option("--grid-t", sweep_grid_t, "Norm grid time points");
  sweep->add_option("--out", sweep_out, "Sweep CSV (default stdout)");

  // repro
  std::string repro_figure = "all";
  std::string repro_out = "repro";
  int repro_steps = kDefaultSteps;
  int repro_stride = 10;
  auto* repro = app.add_subcommand("repro", "Write the CSVs behind figures 2a-2c");
  repro->add_option("--figure", repro_figure, "2a, 2b, 2c or all")
      ->check(CLI::IsMember({"2a", "2b", "2c", "all"}));
  repro->add_option("--out", repro_out, "Output directory");
  repro->add_option("--steps", repro_steps, "RK4 steps")->check(CLI::PositiveNumber);
  repro->add_option("--stride", repro_stride, "Trajectory row stride for 2a")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (rollout->parsed()) {
      const ExampleSuite suite = suite_by_name(rollout_args.problem);
      const Vector x0 = initial_state(suite, rollout_args.x0);
      const CandidateValueFunction J = suite.candidate(rollout_vf, rollout_eps);
      ArgminOptions options = default_argmin_options(suite.problem);
      if (!rollout_argmin.empty()) {
        options.strategy = parse_argmin_strategy(rollout_argmin);
      }
      options.grid_points = rollout_argmin_grid;
      const ControlLaw law(suite.problem, J, options);
      const RolloutResult result = rollout_closed_loop(
          suite.problem, law, x0, rollout_steps, suite.vstar.value(x0, 0.0));

      const double R = reachable_radius(x0, suite.problem.constants.beta_f,
                                        suite.problem.horizon);
      const BoundReport report = performance_bound(
          suite.problem, J, suite.vstar, x0,
          norm_grid(rollout_grid_x, rollout_grid_t, R, J, suite.vstar));
      const double formula = suite.analytic_bound(rollout_vf, rollout_eps, x0);

      nlohmann::json j = to_json(result);
      j["problem"] = suite.problem.name;
      j["vf"] = rollout_vf;
      j["eps"] = rollout_eps;
      j["x0"] = vector_json(x0);
      j["argmin"] = to_string(options.strategy);
      j["bound"] = to_json(report);
      j["bound_formula"] = formula;
      const double tol = kSimulationTolerance;
      const bool sound = result.loss >= -tol &&
                         result.loss <= report.final_bound + tol &&
                         result.loss <= formula + tol &&
                         result.trajectory.max_state_norm() <= R + tol;
      j["sound"] = sound;
      write_json(rollout_out, j);
      if (!rollout_traj.empty()) {
        std::ofstream csv(rollout_traj);
        if (!csv) throw Error("cannot write " + rollout_traj);
        write_trajectory_csv(csv, result.trajectory);
      }
      if (report.warning) std::cerr << "warning: " << *report.warning << '\n';
      return sound ? kExitOk : kExitUnsound;
    }

    if (bound->parsed()) {
      const ExampleSuite suite = suite_by_name(bound_args.problem);
      const Vector x0 = initial_state(suite, bound_args.x0);
      const CandidateValueFunction J = suite.candidate(bound_vf, bound_eps);
      const double R = reachable_radius(x0, suite.problem.constants.beta_f,
                                        suite.problem.horizon);
      const BoundReport report = performance_bound(
          suite.problem, J, suite.vstar, x0,
          norm_grid(bound_grid_x, bound_grid_t, R, J, suite.vstar));
      nlohmann::json j = to_json(report);
      j["problem"] = suite.problem.name;
      j["vf"] = bound_vf;
      j["eps"] = bound_eps;
      j["x0"] = vector_json(x0);
      j["bound_formula"] = suite.analytic_bound(bound_vf, bound_eps, x0);
      write_json(bound_out, j);
      if (report.warning) std::cerr << "warning: " << *report.warning << '\n';
      return kExitOk;
    }

    if (oracle->parsed()) {
      const ExampleSuite suite = suite_by_name(oracle_args.problem);
      const Vector x0 = initial_state(suite, oracle_args.x0);
      const DpMode mode = parse_dp_mode(oracle_mode);
      DpGrid spec = default_dp_grid(suite.problem, x0, mode, oracle_nx, oracle_nt);
      if (oracle_x_min) spec.x_min = *oracle_x_min;
      if (oracle_x_max) spec.x_max = *oracle_x_max;
      const DpGrid grid = dp_solve(suite.problem, spec);
      const double value = dp_query(grid, x0(0), 0.0);
      std::cout.precision(12);
      std::cout << "value " << value << '\n';
      if (oracle_compare) {
        const auto& closed = mode == DpMode::kInf ? suite.problem.optimal_value
                                                  : suite.problem.worst_case_value;
        if (closed) {
          const double analytic = closed(x0, 0.0);
          std::cout << "analytic " << analytic << '\n'
                    << "abs_error " << std::abs(value - analytic) << '\n';
        } else {
          std::cout << "analytic unavailable\n";
        }
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      const ExampleSuite suite = suite_by_name(sweep_args.problem);
      const Vector x0 = initial_state(suite, sweep_args.x0);
      SweepOptions options;
      options.steps = sweep_steps;
      options.grid.time_points = sweep_grid_t;
      if (sweep_grid_x) {
        options.grid.state_points_per_axis = *sweep_grid_x;
        options.resolve_oscillations = false;
      }
      const auto records =
          run_sweep(suite, sweep_family, split_eps(sweep_eps), x0, options);
      if (sweep_out.empty() || sweep_out == "-") {
        write_sweep_csv(std::cout, records);
      } else {
        std::ofstream csv(sweep_out);
        if (!csv) throw Error("cannot write " + sweep_out);
        write_sweep_csv(csv, records);
      }
      bool failed = false;
      for (const auto& rec : records) {
        if (rec.error) {
          std::cerr << "error: eps=" << rec.eps << ": " << *rec.error << '\n';
          failed = true;
        }
      }
      const auto violations = soundness_violations(records);
      for (const auto& v : violations) std::cerr << "unsound: " << v << '\n';
      if (!violations.empty()) return kExitUnsound;
      return failed ? kExitError : kExitOk;
    }

    if (repro->parsed()) {
      SweepOptions options;
      options.steps = repro_steps;
      std::vector<std::string> figures{repro_figure};
      if (repro_figure == "all") figures = {"2a", "2b", "2c"};
      bool unsound = false;
      bool failed = false;
      for (const auto& figure : figures) {
        const ReproResult r =
            reproduce_figure(figure, repro_out, options, repro_stride);
        for (const auto& f : r.files) std::cout << f.string() << '\n';
        for (const auto& v : r.violations) std::cerr << "unsound: " << v << '\n';
        for (const auto& e : r.failures) std::cerr << "error: " << e << '\n';
        unsound = unsound || !r.violations.empty();
        failed = failed || !r.failures.empty();
      }
      if (unsound) return kExitUnsound;
      return failed ? kExitError : kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}
