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

#include "hjbgap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hjbgap {
namespace {

// Linear interpolation in one table row, clamped to the end values.
double interpolate_row(const DpGrid& grid, int k, double x) {
  const double s = (x - grid.x_min) / grid.dx();
  if (s <= 0.0) return grid.at(k, 0);
  if (s >= grid.nx - 1) return grid.at(k, grid.nx - 1);
  const int i = std::min(static_cast<int>(s), grid.nx - 2);
  const double w = s - i;
  return (1.0 - w) * grid.at(k, i) + w * grid.at(k, i + 1);
}

}  // namespace

DpMode parse_dp_mode(std::string_view name) {
  if (name == "inf") return DpMode::kInf;
  if (name == "sup") return DpMode::kSup;
  throw InvalidArgument("unknown oracle mode '" + std::string(name) + "'");
}

std::string to_string(DpMode mode) {
  return mode == DpMode::kInf ? "inf" : "sup";
}

InputSet default_dp_controls(const InputSet& input_set) {
  if (input_set.is_finite()) return input_set;
  if (input_set.dim() != 1) {
    throw InvalidArgument("default DP controls need a scalar input set");
  }
  const double lo = input_set.lower()(0);
  const double hi = input_set.upper()(0);
  std::vector<Vector> values{scalar_vector(lo)};
  if (lo < 0.0 && hi > 0.0) values.push_back(scalar_vector(0.0));
  if (hi > lo) values.push_back(scalar_vector(hi));
  return InputSet::finite(std::move(values));
}

DpGrid default_dp_grid(const OcpProblem& problem, const Vector& x0, DpMode mode,
                       int nx, int nt) {
  const double R =
      reachable_radius(x0, problem.constants.beta_f, problem.horizon);
  DpGrid grid;
  const double half_width = std::max(1.0, 1.25 * R + 0.5);
  grid.x_min = -half_width;
  grid.x_max = half_width;
  grid.nx = nx;
  grid.nt = nt;
  grid.mode = mode;
  grid.control_candidates = default_dp_controls(problem.input_set);
  grid.horizon = problem.horizon;
  return grid;
}

DpGrid dp_solve(const OcpProblem& problem, DpGrid spec) {
  problem.validate();
  if (problem.n != 1) throw InvalidArgument("the DP oracle is 1-D only");
  if (!(spec.x_min < spec.x_max) || spec.nx < 2 || spec.nt < 2) {
    throw InvalidArgument("DP grid needs x_min < x_max, nx >= 2, nt >= 2");
  }
  const auto& controls = spec.control_candidates.values();
  for (const auto& u : controls) {
    if (!problem.input_set.contains(u)) {
      throw InfeasibleInput("DP control candidate outside the input set");
    }
  }
  spec.horizon = problem.horizon;
  spec.values.assign(static_cast<std::size_t>(spec.nx) * spec.nt, 0.0);

  const int last = spec.nt - 1;
  Vector x(1);
  for (int i = 0; i < spec.nx; ++i) {
    x(0) = spec.x_at(i);
    spec.values[static_cast<std::size_t>(last) * spec.nx + i] =
        problem.terminal_cost(x);
  }

  const double dt = spec.dt();
  const double dx = spec.dx();
  const bool minimize = spec.mode == DpMode::kInf;
  for (int k = last - 1; k >= 0; --k) {
    const double t = spec.t_at(k);
    for (int i = 0; i < spec.nx; ++i) {
      x(0) = spec.x_at(i);
      double best = minimize ? INFINITY : -INFINITY;
      for (const auto& u : controls) {
        const double image = x(0) + dt * problem.dynamics(t, x, u)(0);
        if (image < spec.x_min - dx || image > spec.x_max + dx) {
          throw DomainTooSmall("Euler image " + std::to_string(image) +
                               " leaves the DP grid by more than one cell");
        }
        const double candidate = problem.running_cost(t, x, u) * dt +
                                 interpolate_row(spec, k + 1, image);
        best = minimize ? std::min(best, candidate) : std::max(best, candidate);
      }
      spec.values[static_cast<std::size_t>(k) * spec.nx + i] = best;
    }
  }
  return spec;
}

double dp_query(const DpGrid& grid, double x, double t) {
  if (!grid.solved()) throw InvalidArgument("DP grid has not been solved");
  if (x < grid.x_min || x > grid.x_max || t < 0.0 || t > grid.horizon) {
    throw OutOfDomain("DP query (" + std::to_string(x) + ", " +
                      std::to_string(t) + ") outside the grid");
  }
  const double s = std::min((t / grid.dt()), static_cast<double>(grid.nt - 1));
  const int k = std::min(static_cast<int>(s), grid.nt - 2);
  const double w = s - k;
  return (1.0 - w) * interpolate_row(grid, k, x) +
         w * interpolate_row(grid, k + 1, x);
}

}  // namespace hjbgap
