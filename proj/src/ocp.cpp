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

#include "hjbgap/ocp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hjbgap/controller.hpp"

namespace hjbgap {

bool tie_break_less(const Vector& a, const Vector& b) {
  const double na = a.squaredNorm();
  const double nb = b.squaredNorm();
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

InputSet InputSet::finite(std::vector<Vector> values) {
  if (values.empty()) throw EmptyCandidates("finite input set is empty");
  const auto m = values.front().size();
  for (const auto& v : values) {
    if (v.size() != m) {
      throw InvalidArgument("finite input set mixes input dimensions");
    }
  }
  return InputSet(Finite{std::move(values)});
}

InputSet InputSet::box(Vector lower, Vector upper, int grid_points_per_axis) {
  if (lower.size() != upper.size() || lower.size() == 0) {
    throw InvalidArgument("box bounds must have the same nonzero dimension");
  }
  if ((lower.array() > upper.array()).any()) {
    throw InvalidArgument("box requires lower <= upper componentwise");
  }
  if (grid_points_per_axis < 1) {
    throw InvalidArgument("grid_points_per_axis must be positive");
  }
  return InputSet(Box{std::move(lower), std::move(upper), grid_points_per_axis});
}

InputSet InputSet::interval(double lower, double upper,
                            int grid_points_per_axis) {
  return box(scalar_vector(lower), scalar_vector(upper), grid_points_per_axis);
}

int InputSet::dim() const {
  if (const auto* f = std::get_if<Finite>(&set_)) {
    return static_cast<int>(f->values.front().size());
  }
  return static_cast<int>(std::get<Box>(set_).lower.size());
}

bool InputSet::contains(const Vector& u, double tol) const {
  if (u.size() != dim()) return false;
  if (const auto* f = std::get_if<Finite>(&set_)) {
    return std::any_of(f->values.begin(), f->values.end(),
                       [&](const Vector& v) {
                         return (v - u).cwiseAbs().maxCoeff() <= tol;
                       });
  }
  const auto& b = std::get<Box>(set_);
  return (u.array() >= b.lower.array() - tol).all() &&
         (u.array() <= b.upper.array() + tol).all();
}

const std::vector<Vector>& InputSet::values() const {
  if (const auto* f = std::get_if<Finite>(&set_)) return f->values;
  throw InvalidArgument("input set is a box, not a finite set");
}

const Vector& InputSet::lower() const {
  if (const auto* b = std::get_if<Box>(&set_)) return b->lower;
  throw InvalidArgument("input set is a finite set, not a box");
}

const Vector& InputSet::upper() const {
  if (const auto* b = std::get_if<Box>(&set_)) return b->upper;
  throw InvalidArgument("input set is a finite set, not a box");
}

int InputSet::grid_points_per_axis() const {
  if (const auto* b = std::get_if<Box>(&set_)) return b->grid_points_per_axis;
  throw InvalidArgument("input set is a finite set, not a box");
}

InputSet InputSet::with_grid_points(int grid_points_per_axis) const {
  return box(lower(), upper(), grid_points_per_axis);
}

Vector InputSet::smallest_norm_point() const {
  if (const auto* f = std::get_if<Finite>(&set_)) {
    return *std::min_element(f->values.begin(), f->values.end(),
                             tie_break_less);
  }
  const auto& b = std::get<Box>(set_);
  return Vector::Zero(b.lower.size()).cwiseMax(b.lower).cwiseMin(b.upper);
}

void OcpProblem::validate() const {
  if (n < 1 || n > kMaxDim || m < 1 || m > kMaxDim) {
    throw InvalidArgument("problem '" + name + "': dimensions out of range");
  }
  if (!dynamics || !running_cost || !terminal_cost) {
    throw InvalidArgument("problem '" + name + "': f, c and g are required");
  }
  if (input_set.dim() != m) {
    throw InvalidArgument("problem '" + name +
                          "': input set dimension differs from m");
  }
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw InvalidArgument("problem '" + name + "': horizon must be positive");
  }
  if (!(constants.beta_f > 0.0)) {
    throw InvalidArgument("problem '" + name + "': beta_f must be positive");
  }
}

double hamiltonian_from_jet(const OcpProblem& problem, const Jet& jet, double t,
                            const Vector& x, const Vector& u) {
  return jet.grad_t + problem.running_cost(t, x, u) +
         jet.grad_x.dot(problem.dynamics(t, x, u));
}

double hamiltonian(const OcpProblem& problem, const CandidateValueFunction& J,
                   double t, const Vector& x, const Vector& u) {
  return hamiltonian_from_jet(problem, J.jet(x, t), t, x, u);
}

double h_tilde(const OcpProblem& problem, const CandidateValueFunction& J,
               const Vector& x, double t) {
  return argmin_hamiltonian(problem, J, x, t, default_argmin_options(problem))
      .value;
}

ModifiedCosts modified_costs(const OcpProblem& problem,
                             const CandidateValueFunction& J) {
  ModifiedCosts out;
  out.running_cost = [problem, J](double t, const Vector& x, const Vector& u) {
    return problem.running_cost(t, x, u) - h_tilde(problem, J, x, t);
  };
  out.terminal_cost = [J, horizon = problem.horizon](const Vector& x) {
    return J.value(x, horizon);
  };
  return out;
}

double reachable_radius(const Vector& x0, double beta_f, double horizon) {
  if (!(beta_f > 0.0) || !(horizon > 0.0)) {
    throw InvalidArgument("reachable_radius needs beta_f > 0 and T > 0");
  }
  return (1.0 + x0.norm()) * std::exp(beta_f * horizon) - 1.0;
}

}  // namespace hjbgap
