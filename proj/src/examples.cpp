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

#include "hjbgap/examples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hjbgap/bounds.hpp"

namespace hjbgap {
namespace {

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;
constexpr double kFastFrequency = 1e6;

std::vector<double> log_sweep_eps() {
  std::vector<double> eps;
  for (int k = 0; k <= 6; ++k) eps.push_back(std::pow(10.0, -1.0 - 0.5 * k));
  return eps;
}

CandidateFamily exact_family(const CandidateValueFunction& vstar) {
  CandidateFamily family;
  family.name = "vstar";
  family.uses_eps = false;
  family.make = [vstar](double) { return vstar; };
  family.analytic_bound = [](double, const Vector&) { return 0.0; };
  family.default_eps = {0.0};
  return family;
}

// Example 1 value functions. Both are linear on each half-line with a kink
// at x = 0, where the gradient convention is 0.
Jet example1_vstar_jet(const Vector& x, double t) {
  Jet jet;
  jet.grad_x = Vector::Zero(1);
  const double s = x(0);
  if (s > 0.0) {
    const double k = std::exp(t - 1.0);
    jet = {k * s, scalar_vector(k), k * s};
  } else if (s < 0.0) {
    const double k = std::exp(1.0 - t);
    jet = {k * s, scalar_vector(k), -k * s};
  }
  return jet;
}

Jet example1_worst_jet(const Vector& x, double t) {
  Jet jet;
  jet.grad_x = Vector::Zero(1);
  const double s = x(0);
  if (s > 0.0) {
    const double k = std::exp(1.0 - t);
    jet = {k * s, scalar_vector(k), -k * s};
  } else if (s < 0.0) {
    const double k = std::exp(t - 1.0);
    jet = {k * s, scalar_vector(k), k * s};
  }
  return jet;
}

bool at_origin(const Vector& x, double) { return x(0) == 0.0; }

CandidateValueFunction kinked(std::string name,
                              CandidateValueFunction::ValueFn value,
                              CandidateValueFunction::JetFn jet) {
  return CandidateValueFunction::analytic(std::move(name), std::move(value),
                                          std::move(jet))
      .with_exclusions(at_origin, ExclusionPolicy::kAnalyticConvention);
}

}  // namespace

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

const CandidateFamily& ExampleSuite::family(std::string_view name) const {
  for (const auto& f : families) {
    if (f.name == name) return f;
  }
  throw InvalidArgument("problem '" + problem.name + "' has no family '" +
                        std::string(name) + "'");
}

CandidateValueFunction ExampleSuite::candidate(std::string_view name,
                                               double eps) const {
  const CandidateFamily& f = family(name);
  if (f.uses_eps && !(eps > 0.0)) {
    throw InvalidArgument("family '" + f.name + "' needs eps > 0");
  }
  return f.make(eps);
}

double ExampleSuite::analytic_bound(std::string_view name, double eps,
                                    const Vector& x0) const {
  return family(name).analytic_bound(eps, x0);
}

ExampleSuite example1() {
  OcpProblem p;
  p.name = "example1";
  p.n = 1;
  p.m = 1;
  p.dynamics = [](double, const Vector& x, const Vector& u) -> Vector {
    return x.cwiseProduct(u);
  };
  p.running_cost = [](double, const Vector&, const Vector&) { return 0.0; };
  p.terminal_cost = [](const Vector& x) { return x(0); };
  p.input_set = InputSet::interval(-1.0, 1.0);
  p.horizon = 1.0;
  p.constants.beta_f = 1.0;
  p.constants.alpha_g = 1.0;
  p.constants.beta_g = 1.0;
  p.input_affine = true;
  p.optimal_value = [](const Vector& x, double t) {
    return example1_vstar_jet(x, t).value;
  };
  p.worst_case_value = [](const Vector& x, double t) {
    return example1_worst_jet(x, t).value;
  };

  ExampleSuite suite{
      .problem = p,
      .vstar = kinked("vstar", p.optimal_value, example1_vstar_jet),
  };
  suite.worst_case_vf =
      kinked("worst_case", p.worst_case_value, example1_worst_jet);
  suite.default_x0 = scalar_vector(1.0);
  suite.optimal_law = [](double x, double) { return -sign(x); };

  const double T = p.horizon;
  const double beta_f = p.constants.beta_f;
  auto gap = [worst = p.worst_case_value, best = p.optimal_value](
                 const Vector& x0) { return worst(x0, 0.0) - best(x0, 0.0); };

  suite.families.push_back(exact_family(suite.vstar));

  CandidateFamily v1;
  v1.name = "v1";
  v1.make = [](double eps) {
    const double amp = std::sqrt(eps);
    auto value = [eps, amp](const Vector& x, double t) {
      return example1_vstar_jet(x, t).value + amp * std::sin(x(0) / eps);
    };
    auto jet = [eps, amp](const Vector& x, double t) {
      Jet j = example1_vstar_jet(x, t);
      j.value += amp * std::sin(x(0) / eps);
      j.grad_x(0) += std::cos(x(0) / eps) / amp;
      return j;
    };
    return kinked("v1", value, jet).with_oscillation_wavelength(2.0 * kPi * eps);
  };
  v1.analytic_bound = [=](double eps, const Vector& x0) {
    const double norm = std::sqrt(eps) + 1.0 / std::sqrt(eps);
    return std::min(bound_constant(x0, beta_f, T) * norm, gap(x0));
  };
  v1.default_eps = log_sweep_eps();
  suite.families.push_back(v1);

  CandidateFamily v2;
  v2.name = "v2";
  v2.make = [](double eps) {
    const double amp = eps * eps;
    auto value = [amp](const Vector& x, double t) {
      return example1_vstar_jet(x, t).value +
             amp * std::sin(kFastFrequency * x(0));
    };
    auto jet = [amp](const Vector& x, double t) {
      Jet j = example1_vstar_jet(x, t);
      const double phase = kFastFrequency * x(0);
      j.value += amp * std::sin(phase);
      j.grad_x(0) += amp * kFastFrequency * std::cos(phase);
      return j;
    };
    return kinked("v2", value, jet)
        .with_oscillation_wavelength(2.0 * kPi / kFastFrequency);
  };
  v2.analytic_bound = [=](double eps, const Vector& x0) {
    const double norm = (1.0 + kFastFrequency) * eps * eps;
    return std::min(bound_constant(x0, beta_f, T) * norm, gap(x0));
  };
  v2.default_eps = log_sweep_eps();
  suite.families.push_back(v2);
  return suite;
}

ExampleSuite example2() {
  constexpr double T = 1.0;
  OcpProblem p;
  p.name = "example2";
  p.n = 1;
  p.m = 1;
  p.dynamics = [](double, const Vector& x, const Vector& u) -> Vector {
    return u - x;
  };
  p.running_cost = [](double t, const Vector& x, const Vector&) {
    const double s = x(0);
    return (1.0 + 2.0 * (T - t)) * s * s + 2.0 * (T - t) * std::abs(s);
  };
  p.terminal_cost = [](const Vector&) { return 0.0; };
  p.input_set = InputSet::interval(-1.0, 1.0);
  p.horizon = T;
  p.constants.beta_f = 1.0;
  p.constants.alpha_f = 1.0;
  p.constants.beta_g = 1.0;
  p.input_affine = true;
  p.optimal_value = [](const Vector& x, double t) {
    return x(0) * x(0) * (T - t);
  };

  auto vstar_jet = [](const Vector& x, double t) {
    const double s = x(0);
    return Jet{s * s * (T - t), scalar_vector(2.0 * s * (T - t)), -s * s};
  };

  ExampleSuite suite{
      .problem = p,
      .vstar =
          CandidateValueFunction::analytic("vstar", p.optimal_value, vstar_jet),
  };
  suite.default_x0 = scalar_vector(0.0);
  suite.optimal_law = [](double x, double t) { return -sign(2.0 * x * (T - t)); };
  suite.candidate_law = [](double eps, double x, double t) {
    return -sign(2.0 * x * (T - t) + eps);
  };

  suite.families.push_back(exact_family(suite.vstar));

  CandidateFamily veps;
  veps.name = "veps";
  veps.make = [vstar_jet](double eps) {
    auto value = [eps](const Vector& x, double t) {
      return x(0) * x(0) * (T - t) + eps * x(0);
    };
    auto jet = [eps, vstar_jet](const Vector& x, double t) {
      Jet j = vstar_jet(x, t);
      j.value += eps * x(0);
      j.grad_x(0) += eps;
      return j;
    };
    return CandidateValueFunction::analytic("veps", value, jet);
  };
  // |V_eps - V*| = eps |x| and |d/dx| = eps on B_R, so the norm is at most
  // (R + 1) eps.
  veps.analytic_bound = [beta_f = p.constants.beta_f](double eps,
                                                      const Vector& x0) {
    const double R = reachable_radius(x0, beta_f, T);
    return bound_constant(x0, beta_f, T) * (R + 1.0) * eps;
  };
  veps.default_eps = {0.5, 0.1, 0.05, 0.01, 0.005, 0.001};
  suite.families.push_back(veps);
  return suite;
}

ExampleSuite suite_by_name(std::string_view name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2();
  throw InvalidArgument("unknown problem '" + std::string(name) + "'");
}

std::vector<std::string> registered_problems() {
  return {"example1", "example2"};
}

}  // namespace hjbgap
