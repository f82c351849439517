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

#include "hjbgap/value_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hjbgap {

CandidateValueFunction CandidateValueFunction::analytic(std::string name,
                                                        ValueFn value,
                                                        JetFn jet,
                                                        int state_dim) {
  if (!value || !jet) {
    throw InvalidArgument("analytic value function '" + name +
                          "' needs both value and jet closures");
  }
  if (state_dim < 1 || state_dim > kMaxDim) {
    throw InvalidArgument("value function '" + name +
                          "': state dimension out of range");
  }
  CandidateValueFunction vf;
  vf.name_ = std::move(name);
  vf.state_dim_ = state_dim;
  vf.value_ = std::move(value);
  vf.jet_ = std::move(jet);
  return vf;
}

CandidateValueFunction CandidateValueFunction::finite_difference(
    std::string name, ValueFn value, int state_dim, double relative_step) {
  if (!value) {
    throw InvalidArgument("value function '" + name + "' has no value closure");
  }
  if (!(relative_step > 0.0)) {
    throw InvalidArgument("finite-difference step must be positive");
  }
  if (state_dim < 1 || state_dim > kMaxDim) {
    throw InvalidArgument("value function '" + name +
                          "': state dimension out of range");
  }
  CandidateValueFunction vf;
  vf.name_ = std::move(name);
  vf.state_dim_ = state_dim;
  vf.value_ = std::move(value);
  vf.relative_step_ = relative_step;
  vf.policy_ = ExclusionPolicy::kFiniteDifference;
  return vf;
}

CandidateValueFunction CandidateValueFunction::with_exclusions(
    ExclusionFn excluded, ExclusionPolicy policy) const {
  CandidateValueFunction vf = *this;
  vf.excluded_ = std::move(excluded);
  vf.policy_ = policy;
  return vf;
}

CandidateValueFunction CandidateValueFunction::with_oscillation_wavelength(
    double wavelength) const {
  if (!(wavelength > 0.0)) {
    throw InvalidArgument("oscillation wavelength must be positive");
  }
  CandidateValueFunction vf = *this;
  vf.wavelength_ = wavelength;
  return vf;
}

CandidateValueFunction CandidateValueFunction::renamed(std::string name) const {
  CandidateValueFunction vf = *this;
  vf.name_ = std::move(name);
  return vf;
}

bool CandidateValueFunction::excluded(const Vector& x, double t) const {
  return excluded_ && excluded_(x, t);
}

double CandidateValueFunction::value(const Vector& x, double t) const {
  return value_(x, t);
}

Jet CandidateValueFunction::jet(const Vector& x, double t) const {
  if (!jet_) return finite_difference_jet(x, t, relative_step_);
  if (excluded(x, t)) {
    switch (policy_) {
      case ExclusionPolicy::kAnalyticConvention:
        break;
      case ExclusionPolicy::kFiniteDifference:
        return finite_difference_jet(x, t, relative_step_);
      case ExclusionPolicy::kError:
        throw GradientUndefined("gradient of '" + name_ +
                                "' undefined at an excluded point");
    }
  }
  return jet_(x, t);
}

Jet CandidateValueFunction::finite_difference_jet(const Vector& x, double t,
                                                  double relative_step) const {
  Jet out;
  out.value = value_(x, t);
  const double hx =
      relative_step *
      std::max(1.0, x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0);
  out.grad_x.resize(x.size());
  Vector probe = x;
  for (int i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + hx;
    const double up = value_(probe, t);
    probe(i) = x(i) - hx;
    const double down = value_(probe, t);
    probe(i) = x(i);
    out.grad_x(i) = (up - down) / (2.0 * hx);
  }
  const double ht = relative_step * std::max(1.0, std::abs(t));
  out.grad_t = (value_(x, t + ht) - value_(x, t - ht)) / (2.0 * ht);
  return out;
}

}  // namespace hjbgap
