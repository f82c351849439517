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

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hjbgap/types.hpp"
#include "hjbgap/value_function.hpp"

namespace hjbgap {

/// Compact input set U: either an explicit finite list or a closed box.
class InputSet {
 public:
  static constexpr int kDefaultGridPoints = 101;

  static InputSet finite(std::vector<Vector> values);
  static InputSet box(Vector lower, Vector upper,
                      int grid_points_per_axis = kDefaultGridPoints);
  static InputSet interval(double lower, double upper,
                           int grid_points_per_axis = kDefaultGridPoints);

  bool is_finite() const { return std::holds_alternative<Finite>(set_); }
  bool is_box() const { return std::holds_alternative<Box>(set_); }
  int dim() const;

  /// Closed-set membership; `tol` widens the box (or the match radius for a
  /// finite set).
  bool contains(const Vector& u, double tol = 0.0) const;

  /// Finite set members. Throws for a box.
  const std::vector<Vector>& values() const;
  /// Box bounds. Throw for a finite set.
  const Vector& lower() const;
  const Vector& upper() const;
  int grid_points_per_axis() const;

  InputSet with_grid_points(int grid_points_per_axis) const;

  /// Point of the set with the smallest Euclidean norm (lexicographic ties).
  Vector smallest_norm_point() const;

 private:
  struct Finite {
    std::vector<Vector> values;
  };
  struct Box {
    Vector lower;
    Vector upper;
    int grid_points_per_axis;
  };
  explicit InputSet(std::variant<Finite, Box> set) : set_(std::move(set)) {}

  std::variant<Finite, Box> set_;
};

/// Tie-break order among equally good inputs: smaller Euclidean norm first,
/// then lexicographically smaller.
bool tie_break_less(const Vector& a, const Vector& b);

/// Growth and Lipschitz constants of a class-L problem. Only beta_f enters
/// the performance bound; the others are carried as metadata.
struct ClassLConstants {
  double beta_f = 1.0;
  std::optional<double> alpha_f;
  std::optional<double> alpha_c;
  std::optional<double> alpha_g;
  std::optional<double> beta_c;
  std::optional<double> beta_g;
};

/// Finite-horizon optimal control problem {c, g, f, U, T}.
struct OcpProblem {
  using Dynamics = std::function<Vector(double t, const Vector& x, const Vector& u)>;
  using RunningCost = std::function<double(double t, const Vector& x, const Vector& u)>;
  using TerminalCost = std::function<double(const Vector& x)>;
  using ValueOracle = std::function<double(const Vector& x, double t)>;

  std::string name;
  int n = 1;
  int m = 1;
  Dynamics dynamics;
  RunningCost running_cost;
  TerminalCost terminal_cost;
  InputSet input_set = InputSet::interval(-1.0, 1.0);
  double horizon = 1.0;
  ClassLConstants constants;
  /// f and c are affine in u, so the Hamiltonian is too.
  bool input_affine = false;
  /// Closed-form V*(x, t), when known.
  ValueOracle optimal_value;
  /// Closed-form cost-maximizing value function, when known.
  ValueOracle worst_case_value;

  /// Throws InvalidArgument on inconsistent dimensions or constants.
  void validate() const;
};

/// H_J(t,x,u) = dJ/dt + c(t,x,u) + grad_x J . f(t,x,u).
double hamiltonian(const OcpProblem& problem, const CandidateValueFunction& J,
                   double t, const Vector& x, const Vector& u);

/// Hamiltonian with the jet of J already evaluated at (x, t).
double hamiltonian_from_jet(const OcpProblem& problem, const Jet& jet, double t,
                            const Vector& x, const Vector& u);

/// inf over U of H_J(t,x,u), using the problem's default argmin strategy.
double h_tilde(const OcpProblem& problem, const CandidateValueFunction& J,
               const Vector& x, double t);

/// Running and terminal costs of the modified problem for which J is the
/// exact value function: c~ = c - H~_J, g~ = J(., T).
struct ModifiedCosts {
  OcpProblem::RunningCost running_cost;
  OcpProblem::TerminalCost terminal_cost;
};

ModifiedCosts modified_costs(const OcpProblem& problem,
                             const CandidateValueFunction& J);

/// Gronwall radius (1 + |x0|) e^{beta_f T} - 1 enclosing every admissible
/// trajectory from x0.
double reachable_radius(const Vector& x0, double beta_f, double horizon);

}  // namespace hjbgap
