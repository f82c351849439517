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

#include <string>
#include <string_view>
#include <vector>

#include "hjbgap/ocp.hpp"

namespace hjbgap {

enum class DpMode { kInf, kSup };

DpMode parse_dp_mode(std::string_view name);
std::string to_string(DpMode mode);

/// Backward dynamic-programming table over a scalar state grid. Row k holds
/// the values at t_k = k T / (nt - 1); row nt - 1 is the terminal cost.
struct DpGrid {
  double x_min = -5.0;
  double x_max = 5.0;
  int nx = 2001;
  int nt = 2001;
  DpMode mode = DpMode::kInf;
  InputSet control_candidates = InputSet::finite(
      {scalar_vector(-1.0), scalar_vector(0.0), scalar_vector(1.0)});
  double horizon = 0.0;
  std::vector<double> values;

  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dt() const { return horizon / (nt - 1); }
  double x_at(int i) const { return i == nx - 1 ? x_max : x_min + i * dx(); }
  double t_at(int k) const { return k == nt - 1 ? horizon : k * dt(); }
  double at(int k, int i) const {
    return values[static_cast<std::size_t>(k) * nx + i];
  }
  bool solved() const {
    return values.size() == static_cast<std::size_t>(nx) * nt;
  }
};

/// {lower, 0, upper} for a scalar box (0 only when inside), the members of
/// a finite set otherwise.
InputSet default_dp_controls(const InputSet& input_set);

/// Grid whose domain covers the Gronwall ball of x0 with margin.
DpGrid default_dp_grid(const OcpProblem& problem, const Vector& x0, DpMode mode,
                       int nx = 2001, int nt = 2001);

/// Fills spec.values by explicit-Euler semi-Lagrangian backward recursion
/// with linear interpolation and boundary clamping.
DpGrid dp_solve(const OcpProblem& problem, DpGrid spec);

/// Bilinear interpolation of a solved table.
double dp_query(const DpGrid& grid, double x, double t);

}  // namespace hjbgap
