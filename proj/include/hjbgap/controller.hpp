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

#include "hjbgap/ocp.hpp"
#include "hjbgap/value_function.hpp"

namespace hjbgap {

enum class ArgminStrategy {
  /// Uniform grid over a box (plus golden-section refinement for scalar u).
  kGrid,
  /// Closed-form -sign(b) for scalar input-affine Hamiltonians a + b u.
  kAffineBangBang,
  /// Exhaustive search over a finite input set.
  kFinite,
};

ArgminStrategy parse_argmin_strategy(std::string_view name);
std::string to_string(ArgminStrategy strategy);

struct ArgminOptions {
  static constexpr double kDefaultTieTolerance = 1e-12;

  ArgminStrategy strategy = ArgminStrategy::kGrid;
  double tie_tolerance = kDefaultTieTolerance;
  /// Overrides the box's grid_points_per_axis when positive.
  int grid_points = 0;
  bool golden_refinement = true;
};

/// Finite sets search exhaustively, input-affine scalar boxes use the
/// bang-bang fast path, every other box uses the grid.
ArgminOptions default_argmin_options(const OcpProblem& problem);

struct ArgminResult {
  Vector u;
  double value = 0.0;
};

/// Minimizes H_J(t, x, .) over U. Among candidates within tie_tolerance of
/// the best value the tie_break_less-smallest one is returned.
ArgminResult argmin_hamiltonian(const OcpProblem& problem,
                                const CandidateValueFunction& J,
                                const Vector& x, double t,
                                const ArgminOptions& options);

/// Feedback law k_J(x, t) in arg inf_u H_J(t, x, u). Immutable.
class ControlLaw {
 public:
  ControlLaw(OcpProblem problem, CandidateValueFunction vf);
  ControlLaw(OcpProblem problem, CandidateValueFunction vf,
             ArgminOptions options);

  const OcpProblem& problem() const { return problem_; }
  const CandidateValueFunction& source_vf() const { return vf_; }
  const ArgminOptions& options() const { return options_; }
  ArgminStrategy strategy() const { return options_.strategy; }
  double tie_tolerance() const { return options_.tie_tolerance; }

 private:
  OcpProblem problem_;
  CandidateValueFunction vf_;
  ArgminOptions options_;
};

Vector synthesize_input(const ControlLaw& law, const Vector& x, double t);

/// Input coefficient b(t, x) of a scalar input-affine Hamiltonian, from two
/// evaluations with a third checking linearity.
double affine_coefficient(const ControlLaw& law, const Vector& x, double t);

}  // namespace hjbgap
