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

#include <optional>
#include <string>
#include <vector>

#include "hjbgap/ocp.hpp"
#include "hjbgap/value_function.hpp"

namespace hjbgap {

/// Sampling grid for the W^{1,inf} error norm over B_R(0) x [0, T].
struct NormGridSpec {
  int state_points_per_axis = 4001;
  int time_points = 101;
  /// Cell-centred sampling: every point lies strictly inside the domain.
  bool offset = true;
};

/// Minimum samples per declared oscillation wavelength before the estimator
/// reports under-resolution.
inline constexpr double kSamplesPerWavelength = 20.0;

struct NormEstimate {
  /// Sum of the per-term grid maxima below.
  double value = 0.0;
  double value_term = 0.0;
  std::vector<double> grad_x_terms;
  double grad_t_term = 0.0;
  long long samples = 0;
  long long skipped = 0;
  std::optional<std::string> warning;
};

/// 2 max{1, T, T beta_f (1 + |x0|) e^{beta_f T}}.
double bound_constant(const Vector& x0, double beta_f, double horizon);

/// Grid estimate of ||J - V*||_{W^{1,inf}(B_R(0) x [0,T])}: the sum over the
/// value and every first-order partial of the maximum absolute error. Points
/// excluded by either function are skipped. Deterministic for any worker
/// count; workers = 0 uses the hardware concurrency.
NormEstimate sobolev_norm_estimate(const CandidateValueFunction& J,
                                   const CandidateValueFunction& vstar,
                                   double R, double horizon,
                                   const NormGridSpec& grid, int workers = 0);

/// Sample budget for grids raised by resolve_grid.
inline constexpr long long kResolvedSampleBudget = 20'000'000;

/// Raises state_points_per_axis so the declared wavelength gets at least
/// kSamplesPerWavelength samples across (-R, R). When the state grid is
/// raised, time_points is lowered (never below 1) so that the scalar grid
/// stays within `sample_budget`; declared oscillations are spatial.
NormGridSpec resolve_grid(const NormGridSpec& base, double R,
                          std::optional<double> wavelength,
                          long long sample_budget = kResolvedSampleBudget);

struct WorstCaseOptions {
  bool allow_oracle = true;
  int oracle_nx = 2001;
  int oracle_nt = 2001;
};

/// V(x0, 0) - V*(x0, 0) with V the cost-maximizing value function, from closed
/// forms or the DP oracle (inf and sup mode).
double worst_case_gap(const OcpProblem& problem, const Vector& x0,
                      const WorstCaseOptions& options = {});

struct BoundReport {
  double R = 0.0;
  double C = 0.0;
  double sobolev_norm_estimate = 0.0;
  double sobolev_bound = 0.0;
  std::optional<double> worst_case_gap;
  double final_bound = 0.0;
  NormGridSpec grid;
  std::optional<std::string> warning;
};

/// Assembles R, C, the norm estimate, C * norm, the worst-case gap when one is
/// available, and their minimum. A precomputed worst-case gap may be passed
/// to skip the oracle.
BoundReport performance_bound(const OcpProblem& problem,
                              const CandidateValueFunction& J,
                              const CandidateValueFunction& vstar,
                              const Vector& x0, const NormGridSpec& grid,
                              const WorstCaseOptions& options = {},
                              std::optional<double> known_worst_case_gap =
                                  std::nullopt);

}  // namespace hjbgap
