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

#include "hjbgap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "hjbgap/controller.hpp"
#include "hjbgap/io.hpp"

namespace hjbgap {
namespace {

int worker_count(int requested, std::size_t jobs) {
  int workers = requested > 0
                    ? requested
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::max(1, std::min<int>(workers, static_cast<int>(jobs)));
}

// Runs job(i) for i in [0, count) on a small pool; output slots are fixed by
// index so results do not depend on scheduling.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& job) {
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) job(i);
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(drain);
  drain();
  for (auto& th : threads) th.join();
}

std::vector<double> normalized_eps(const CandidateFamily& family,
                                   std::vector<double> eps_list) {
  if (!family.uses_eps) return {0.0};
  if (eps_list.empty()) eps_list = family.default_eps;
  std::sort(eps_list.begin(), eps_list.end(), std::greater<>());
  eps_list.erase(std::unique(eps_list.begin(), eps_list.end()), eps_list.end());
  return eps_list;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const ExampleSuite& suite,
                                   std::string_view family_name,
                                   std::vector<double> eps_list,
                                   const Vector& x0,
                                   const SweepOptions& options) {
  const OcpProblem& problem = suite.problem;
  const CandidateFamily& family = suite.family(family_name);
  eps_list = normalized_eps(family, std::move(eps_list));

  const double R =
      reachable_radius(x0, problem.constants.beta_f, problem.horizon);
  const double baseline = suite.vstar.value(x0, 0.0);

  // One grid per family, sized by the finest oscillation over the sweep.
  NormGridSpec grid = options.grid;
  if (options.resolve_oscillations) {
    std::optional<double> finest;
    for (double eps : eps_list) {
      std::optional<double> wavelength;
      try {
        wavelength = family.make(eps).oscillation_wavelength();
      } catch (const std::exception&) {
        continue;  // reported on the record below
      }
      if (wavelength && (!finest || *wavelength < *finest)) finest = wavelength;
    }
    grid = resolve_grid(grid, R, finest);
  }

  std::optional<double> worst_gap;
  try {
    worst_gap = worst_case_gap(problem, x0, options.worst_case);
  } catch (const Unavailable&) {
  }

  std::vector<SweepRecord> records(eps_list.size());
  parallel_for(records.size(), worker_count(options.workers, records.size()),
               [&](std::size_t i) {
    SweepRecord& rec = records[i];
    rec.eps = eps_list[i];
    rec.steps = options.steps;
    rec.reachable_radius = R;
    const auto start = std::chrono::steady_clock::now();
    try {
      const CandidateValueFunction J = family.make(rec.eps);
      const ControlLaw law(problem, J);
      const RolloutResult result =
          rollout_closed_loop(problem, law, x0, options.steps, baseline);
      rec.total_cost = result.total_cost;
      rec.loss_numeric = result.loss;
      rec.max_state_norm = result.trajectory.max_state_norm();
      rec.bound_formula = family.analytic_bound(rec.eps, x0);
      rec.bound = performance_bound(problem, J, suite.vstar, x0, grid,
                                    options.worst_case, worst_gap);
      rec.bound_grid = rec.bound.final_bound;
      rec.norm_estimate = rec.bound.sobolev_norm_estimate;
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    rec.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  });
  return records;
}

std::vector<std::string> soundness_violations(
    const std::vector<SweepRecord>& records, double tol) {
  std::vector<std::string> out;
  for (const auto& rec : records) {
    if (rec.error) continue;
    std::ostringstream where;
    where << "eps=" << rec.eps << ": ";
    if (rec.loss_numeric < -tol) {
      out.push_back(where.str() + "loss " + std::to_string(rec.loss_numeric) +
                    " is negative");
    }
    if (rec.loss_numeric > rec.bound_formula + tol) {
      out.push_back(where.str() + "loss " + std::to_string(rec.loss_numeric) +
                    " exceeds the closed-form bound " +
                    std::to_string(rec.bound_formula));
    }
    if (rec.loss_numeric > rec.bound_grid + tol) {
      out.push_back(where.str() + "loss " + std::to_string(rec.loss_numeric) +
                    " exceeds the grid bound " + std::to_string(rec.bound_grid));
    }
    if (rec.max_state_norm > rec.reachable_radius + tol) {
      out.push_back(where.str() + "state norm " +
                    std::to_string(rec.max_state_norm) +
                    " leaves the Gronwall ball of radius " +
                    std::to_string(rec.reachable_radius));
    }
  }
  return out;
}

std::vector<FamilyTrajectory> run_trajectory_family(
    const ExampleSuite& suite, std::string_view family_name,
    std::vector<double> eps_list, const Vector& x0, int steps) {
  const CandidateFamily& family = suite.family(family_name);
  eps_list = normalized_eps(family, std::move(eps_list));
  const double baseline = suite.vstar.value(x0, 0.0);
  std::vector<FamilyTrajectory> out(eps_list.size());
  parallel_for(out.size(), worker_count(0, out.size()), [&](std::size_t i) {
    out[i].eps = eps_list[i];
    const ControlLaw law(suite.problem, family.make(eps_list[i]));
    out[i].result =
        rollout_closed_loop(suite.problem, law, x0, steps, baseline);
  });
  return out;
}

std::vector<double> trajectory_figure_eps() {
  std::vector<double> eps;
  for (int n : {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000,
                20000}) {
    eps.push_back(1.0 / n);
  }
  return eps;
}

ReproResult reproduce_figure(std::string_view figure,
                             const std::filesystem::path& dir,
                             const SweepOptions& options,
                             int trajectory_stride) {
  std::filesystem::create_directories(dir);
  ReproResult out;

  auto sweep_to = [&](const ExampleSuite& suite, const char* family,
                      const char* file) {
    const auto records =
        run_sweep(suite, family, {}, suite.default_x0, options);
    const auto path = dir / file;
    std::ofstream csv(path);
    if (!csv) throw Error("cannot write " + path.string());
    write_sweep_csv(csv, records);
    out.files.push_back(path);
    for (auto& v : soundness_violations(records)) {
      out.violations.push_back(std::string(family) + " " + v);
    }
    for (const auto& rec : records) {
      if (rec.error) {
        out.failures.push_back(std::string(family) +
                               " eps=" + std::to_string(rec.eps) + ": " +
                               *rec.error);
      }
    }
  };

  if (figure == "2a") {
    const ExampleSuite suite = example1();
    const auto family = run_trajectory_family(
        suite, "v1", trajectory_figure_eps(), suite.default_x0, options.steps);
    const auto path = dir / "fig2a_trajectories.csv";
    std::ofstream csv(path);
    if (!csv) throw Error("cannot write " + path.string());
    write_family_trajectories_csv(csv, family, trajectory_stride);
    out.files.push_back(path);
  } else if (figure == "2b") {
    const ExampleSuite suite = example1();
    sweep_to(suite, "v1", "fig2b_v1.csv");
    sweep_to(suite, "v2", "fig2b_v2.csv");
  } else if (figure == "2c") {
    sweep_to(example2(), "veps", "fig2c_veps.csv");
  } else {
    throw InvalidArgument("unknown figure '" + std::string(figure) +
                          "' (expected 2a, 2b or 2c)");
  }
  return out;
}

}  // namespace hjbgap
