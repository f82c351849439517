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
#include <string_view>
#include <vector>

#include "hjbgap/ocp.hpp"
#include "hjbgap/value_function.hpp"

namespace hjbgap {

/// A named family eps -> J_eps of candidate value functions together with
/// the closed-form performance bound the theory gives for it.
struct CandidateFamily {
  std::string name;
  bool uses_eps = true;
  std::function<CandidateValueFunction(double eps)> make;
  /// Closed-form bound on the loss of u_{J_eps} from x0.
  std::function<double(double eps, const Vector& x0)> analytic_bound;
  std::vector<double> default_eps;
};

/// A registered problem with its exact value functions and candidates.
struct ExampleSuite {
  using ScalarLaw = std::function<double(double x, double t)>;
  using CandidateLaw = std::function<double(double eps, double x, double t)>;

  OcpProblem problem;
  CandidateValueFunction vstar;
  std::optional<CandidateValueFunction> worst_case_vf{};
  std::vector<CandidateFamily> families{};
  Vector default_x0{};
  /// Closed-form optimal feedback, when known.
  ScalarLaw optimal_law{};
  /// Closed-form feedback synthesized from the "veps"-style family.
  CandidateLaw candidate_law{};

  const CandidateFamily& family(std::string_view name) const;
  CandidateValueFunction candidate(std::string_view family,
                                   double eps) const;
  double analytic_bound(std::string_view family, double eps,
                        const Vector& x0) const;
};

/// c = 0, g = x, f = x u, U = [-1, 1], T = 1. Families "vstar", "v1"
/// (V* + sqrt(eps) sin(x / eps)) and "v2" (V* + eps^2 sin(1e6 x)).
ExampleSuite example1();

/// c = (1 + 2(T - t)) x^2 + 2(T - t)|x|, g = 0, f = -x + u, U = [-1, 1],
/// T = 1. Families "vstar" and "veps" (V* + eps x).
ExampleSuite example2();

ExampleSuite suite_by_name(std::string_view name);
std::vector<std::string> registered_problems();

/// -1, 0 or 1.
double sign(double v);

}  // namespace hjbgap
