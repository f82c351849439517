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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hjbgap/bounds.hpp"
#include "hjbgap/examples.hpp"
#include "hjbgap/simulate.hpp"

namespace hjbgap {

/// Loss tolerance used by every soundness check on 10^4-step rollouts.
inline constexpr double kSimulationTolerance = 1e-3;

struct SweepRecord {
  double eps = 0.0;
  double loss_numeric = 0.0;
  double bound_formula = 0.0;
  double bound_grid = 0.0;
  double norm_estimate = 0.0;
  int steps = 0;
  double runtime_ms = 0.0;

  double total_cost = 0.0;
  double max_state_norm = 0.0;
  double reachable_radius = 0.0;
  BoundReport bound;
  /// Set when the record failed; the numeric fields are then meaningless.
  std::optional<std::string> error;
};

struct SweepOptions {
  int steps = kDefaultSteps;
  NormGridSpec grid;
  /// Raise the state grid to the family's finest declared wavelength.
  bool resolve_oscillations = true;
  WorstCaseOptions worst_case;
  /// 0 = hardware concurrency.
  int workers = 0;
};

/// One closed-loop rollout and bound evaluation per eps, sorted by
/// descending eps. Failed records carry `error` instead of being dropped.
std::vector<SweepRecord> run_sweep(const ExampleSuite& suite,
                                   std::string_view family,
                                   std::vector<double> eps_list,
                                   const Vector& x0,
                                   const SweepOptions& options = {});

/// Human-readable descriptions of every soundness violation: loss below
/// -tol, above either bound + tol, or a state leaving the Gronwall ball.
std::vector<std::string> soundness_violations(
    const std::vector<SweepRecord>& records,
    double tol = kSimulationTolerance);

struct FamilyTrajectory {
  double eps = 0.0;
  RolloutResult result;
};

std::vector<FamilyTrajectory> run_trajectory_family(
    const ExampleSuite& suite, std::string_view family,
    std::vector<double> eps_list, const Vector& x0, int steps);

/// Representative eps = 1/n values for the trajectory figure.
std::vector<double> trajectory_figure_eps();

struct ReproResult {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> violations;
  std::vector<std::string> failures;
};

/// Writes the CSVs behind figure "2a", "2b" or "2c" into `dir`.
ReproResult reproduce_figure(std::string_view figure,
                             const std::filesystem::path& dir,
                             const SweepOptions& options = {},
                             int trajectory_stride = 10);

}  // namespace hjbgap
