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
#include <span>
#include <vector>

#include "hjbgap/controller.hpp"
#include "hjbgap/ocp.hpp"

namespace hjbgap {

/// Time-gridded rollout. inputs[i] is held on [times[i], times[i+1]).
struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;
  std::vector<Vector> inputs;
  std::vector<double> running_cost_samples;

  int steps() const { return static_cast<int>(inputs.size()); }
  double max_state_norm() const;
};

struct RolloutResult {
  Trajectory trajectory;
  double total_cost = 0.0;
  double loss = 0.0;
  double vstar_at_origin_point = 0.0;
};

inline constexpr int kDefaultSteps = 10'000;

/// V*(x0, 0) from the problem's closed form, else from the inf-mode DP
/// oracle (scalar states only; Unavailable otherwise).
double baseline_value(const OcpProblem& problem, const Vector& x0);

/// Closed-loop rollout on a uniform grid: u_i = k_J(x_i, t_i) held over one
/// classical RK4 step, cost by left Riemann sum plus g(x_N). The loss is
/// taken against `baseline` when given, else baseline_value().
RolloutResult rollout_closed_loop(const OcpProblem& problem,
                                  const ControlLaw& law, const Vector& x0,
                                  int steps,
                                  std::optional<double> baseline = std::nullopt);

/// Same integrator and quadrature with a given piecewise-constant input.
RolloutResult rollout_open_loop(const OcpProblem& problem,
                                std::span<const Vector> inputs,
                                const Vector& x0,
                                std::optional<double> baseline = std::nullopt);

/// Left Riemann sum of the stored running-cost samples plus g(x_N).
double riemann_cost(const Trajectory& trajectory, const OcpProblem& problem);

/// Re-scores a stored trajectory under the modified costs of J.
double modified_cost_of(const RolloutResult& result, const OcpProblem& problem,
                        const CandidateValueFunction& J);

}  // namespace hjbgap
