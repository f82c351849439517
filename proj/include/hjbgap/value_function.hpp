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

#include "hjbgap/types.hpp"

namespace hjbgap {

/// Value and first-order partials of a scalar field J(x, t).
struct Jet {
  double value = 0.0;
  Vector grad_x;
  double grad_t = 0.0;
};

/// What a gradient request does at a point flagged by the exclusion set.
enum class ExclusionPolicy {
  /// Use the analytic closure anyway; it is expected to return an element of
  /// the Clarke subdifferential (e.g. 0 at a kink).
  kAnalyticConvention,
  kFiniteDifference,
  kError,
};

/// Candidate value function J(x, t) with gradient access. Gradients come
/// either from an analytic jet closure or from central finite differences
/// with per-coordinate step h = relative_step * max(1, |x|_inf).
class CandidateValueFunction {
 public:
  using ValueFn = std::function<double(const Vector&, double)>;
  using JetFn = std::function<Jet(const Vector&, double)>;
  using ExclusionFn = std::function<bool(const Vector&, double)>;

  static constexpr double kDefaultRelativeStep = 1e-5;

  static CandidateValueFunction analytic(std::string name, ValueFn value,
                                         JetFn jet, int state_dim = 1);
  static CandidateValueFunction finite_difference(
      std::string name, ValueFn value, int state_dim = 1,
      double relative_step = kDefaultRelativeStep);

  CandidateValueFunction with_exclusions(ExclusionFn excluded,
                                         ExclusionPolicy policy) const;
  /// Smallest spatial wavelength of any oscillation in J. Used by the Sobolev
  /// estimator for its resolution check.
  CandidateValueFunction with_oscillation_wavelength(double wavelength) const;
  CandidateValueFunction renamed(std::string name) const;

  const std::string& name() const { return name_; }
  int state_dim() const { return state_dim_; }
  bool has_analytic_gradients() const { return static_cast<bool>(jet_); }
  double relative_step() const { return relative_step_; }
  std::optional<double> oscillation_wavelength() const { return wavelength_; }
  ExclusionPolicy exclusion_policy() const { return policy_; }

  bool excluded(const Vector& x, double t) const;

  double value(const Vector& x, double t) const;
  Jet jet(const Vector& x, double t) const;
  Vector grad_x(const Vector& x, double t) const { return jet(x, t).grad_x; }
  double grad_t(const Vector& x, double t) const { return jet(x, t).grad_t; }

  /// Central-difference jet from the value closure alone, independent of any
  /// analytic gradients.
  Jet finite_difference_jet(const Vector& x, double t,
                            double relative_step) const;

 private:
  CandidateValueFunction() = default;

  std::string name_;
  int state_dim_ = 1;
  ValueFn value_;
  JetFn jet_;
  ExclusionFn excluded_;
  ExclusionPolicy policy_ = ExclusionPolicy::kError;
  double relative_step_ = kDefaultRelativeStep;
  std::optional<double> wavelength_;
};

}  // namespace hjbgap
