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

#include "hjbgap/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hjbgap/oracle.hpp"

namespace hjbgap {
namespace {

Vector rk4_step(const OcpProblem& problem, double t, const Vector& x,
                const Vector& u, double dt) {
  const Vector k1 = problem.dynamics(t, x, u);
  const Vector k2 = problem.dynamics(t + 0.5 * dt, x + 0.5 * dt * k1, u);
  const Vector k3 = problem.dynamics(t + 0.5 * dt, x + 0.5 * dt * k2, u);
  const Vector k4 = problem.dynamics(t + dt, x + dt * k3, u);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

template <typename InputAt>
RolloutResult rollout(const OcpProblem& problem, const Vector& x0, int steps,
                      InputAt&& input_at, std::optional<double> baseline) {
  problem.validate();
  if (steps < 1) throw InvalidArgument("rollout needs steps >= 1");
  if (x0.size() != problem.n) {
    throw InvalidArgument("initial state dimension differs from n");
  }

  RolloutResult result;
  Trajectory& traj = result.trajectory;
  traj.times.resize(steps + 1);
  traj.states.reserve(steps + 1);
  traj.inputs.reserve(steps);
  traj.running_cost_samples.reserve(steps);

  const double T = problem.horizon;
  const double dt = T / steps;
  for (int i = 0; i <= steps; ++i) traj.times[i] = i == steps ? T : i * dt;

  traj.states.push_back(x0);
  for (int i = 0; i < steps; ++i) {
    const double t = traj.times[i];
    const Vector& x = traj.states.back();
    Vector u = input_at(i, x, t);
    traj.running_cost_samples.push_back(problem.running_cost(t, x, u));
    Vector next = rk4_step(problem, t, x, u, traj.times[i + 1] - t);
    if (!next.allFinite()) {
      throw NonfiniteState("state became nonfinite at step " +
                               std::to_string(i + 1),
                           i + 1);
    }
    traj.inputs.push_back(std::move(u));
    traj.states.push_back(std::move(next));
  }

  result.total_cost = riemann_cost(traj, problem);
  result.vstar_at_origin_point =
      baseline ? *baseline : baseline_value(problem, x0);
  result.loss = result.total_cost - result.vstar_at_origin_point;
  return result;
}

}  // namespace

double Trajectory::max_state_norm() const {
  double out = 0.0;
  for (const auto& x : states) out = std::max(out, x.norm());
  return out;
}

double baseline_value(const OcpProblem& problem, const Vector& x0) {
  if (problem.optimal_value) return problem.optimal_value(x0, 0.0);
  if (problem.n != 1) {
    throw Unavailable("problem '" + problem.name +
                      "' has no closed-form V* and the DP oracle is 1-D only");
  }
  const DpGrid grid =
      dp_solve(problem, default_dp_grid(problem, x0, DpMode::kInf));
  return dp_query(grid, x0(0), 0.0);
}

RolloutResult rollout_closed_loop(const OcpProblem& problem,
                                  const ControlLaw& law, const Vector& x0,
                                  int steps, std::optional<double> baseline) {
  if (law.problem().name != problem.name || law.problem().n != problem.n ||
      law.problem().m != problem.m) {
    throw InvalidArgument("control law was synthesized for another problem");
  }
  return rollout(
      problem, x0, steps,
      [&](int, const Vector& x, double t) { return synthesize_input(law, x, t); },
      baseline);
}

RolloutResult rollout_open_loop(const OcpProblem& problem,
                                std::span<const Vector> inputs,
                                const Vector& x0,
                                std::optional<double> baseline) {
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!problem.input_set.contains(inputs[i])) {
      throw InfeasibleInput("input " + std::to_string(i) +
                            " lies outside the input set");
    }
  }
  return rollout(
      problem, x0, static_cast<int>(inputs.size()),
      [&](int i, const Vector&, double) { return inputs[i]; }, baseline);
}

double riemann_cost(const Trajectory& trajectory, const OcpProblem& problem) {
  double total = 0.0;
  for (int i = 0; i < trajectory.steps(); ++i) {
    total += trajectory.running_cost_samples[i] *
             (trajectory.times[i + 1] - trajectory.times[i]);
  }
  return total + problem.terminal_cost(trajectory.states.back());
}

double modified_cost_of(const RolloutResult& result, const OcpProblem& problem,
                        const CandidateValueFunction& J) {
  const ModifiedCosts modified = modified_costs(problem, J);
  const Trajectory& traj = result.trajectory;
  double total = 0.0;
  for (int i = 0; i < traj.steps(); ++i) {
    total += modified.running_cost(traj.times[i], traj.states[i], traj.inputs[i]) *
             (traj.times[i + 1] - traj.times[i]);
  }
  return total + modified.terminal_cost(traj.states.back());
}

}  // namespace hjbgap
