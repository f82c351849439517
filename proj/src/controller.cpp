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

#include "hjbgap/controller.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace hjbgap {
namespace {

constexpr double kLinearityTolerance = 1e-9;
constexpr long long kMaxGridCandidates = 10'000'000;
constexpr int kGoldenIterations = 80;

struct Candidate {
  Vector u;
  double value;
};

ArgminResult select(const std::vector<Candidate>& candidates, double tol) {
  if (candidates.empty()) throw EmptyCandidates("no input candidates");
  double best = candidates.front().value;
  for (const auto& c : candidates) best = std::min(best, c.value);
  const Candidate* chosen = nullptr;
  for (const auto& c : candidates) {
    if (c.value > best + tol) continue;
    if (chosen == nullptr || tie_break_less(c.u, chosen->u)) chosen = &c;
  }
  return {chosen->u, chosen->value};
}

class HamiltonianAt {
 public:
  HamiltonianAt(const OcpProblem& problem, const CandidateValueFunction& J,
                const Vector& x, double t)
      : problem_(problem), x_(x), t_(t), jet_(J.jet(x, t)) {}

  double operator()(const Vector& u) const {
    return hamiltonian_from_jet(problem_, jet_, t_, x_, u);
  }

 private:
  const OcpProblem& problem_;
  const Vector& x_;
  double t_;
  Jet jet_;
};

double affine_b(const OcpProblem& problem, const HamiltonianAt& H) {
  const double lo = problem.input_set.lower()(0);
  const double hi = problem.input_set.upper()(0);
  if (lo == hi) return 0.0;
  double p0 = 0.0;
  double p1 = 1.0;
  if (!(lo <= 0.0 && hi >= 1.0)) {
    p0 = lo;
    p1 = hi;
  }
  const double h0 = H(scalar_vector(p0));
  const double h1 = H(scalar_vector(p1));
  const double hm = H(scalar_vector(0.5 * (p0 + p1)));
  const double scale = std::max({1.0, std::abs(h0), std::abs(h1)});
  if (std::abs(hm - 0.5 * (h0 + h1)) > kLinearityTolerance * scale) {
    throw NonAffineHamiltonian("Hamiltonian of problem '" + problem.name +
                               "' is not affine in u");
  }
  return (h1 - h0) / (p1 - p0);
}

ArgminResult affine_argmin(const OcpProblem& problem, const HamiltonianAt& H,
                           double tol) {
  const double b = affine_b(problem, H);
  Vector u;
  if (b > tol) {
    u = problem.input_set.lower();
  } else if (b < -tol) {
    u = problem.input_set.upper();
  } else {
    u = problem.input_set.smallest_norm_point();
  }
  return {u, H(u)};
}

ArgminResult finite_argmin(const std::vector<Vector>& values,
                           const HamiltonianAt& H, double tol) {
  std::vector<Candidate> candidates;
  candidates.reserve(values.size());
  for (const auto& u : values) candidates.push_back({u, H(u)});
  return select(candidates, tol);
}

// Golden-section search for a minimum of H on [a, b].
Candidate golden_section(const HamiltonianAt& H, double a, double b) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = H(scalar_vector(c));
  double fd = H(scalar_vector(d));
  for (int i = 0; i < kGoldenIterations && (b - a) > 1e-14; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = H(scalar_vector(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = H(scalar_vector(d));
    }
  }
  return fc <= fd ? Candidate{scalar_vector(c), fc}
                  : Candidate{scalar_vector(d), fd};
}

ArgminResult grid_argmin(const OcpProblem& problem, const HamiltonianAt& H,
                         const ArgminOptions& options) {
  const InputSet& set = problem.input_set;
  const Vector& lo = set.lower();
  const Vector& hi = set.upper();
  const int m = static_cast<int>(lo.size());
  const int points =
      options.grid_points > 0 ? options.grid_points : set.grid_points_per_axis();

  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= points;
    if (total > kMaxGridCandidates) {
      throw InvalidArgument("argmin grid too large; reduce --argmin-grid");
    }
  }

  auto axis_value = [&](int axis, int k) {
    if (points == 1) return 0.5 * (lo(axis) + hi(axis));
    if (k == points - 1) return hi(axis);
    return lo(axis) + (hi(axis) - lo(axis)) * k / (points - 1);
  };

  std::vector<Candidate> candidates;
  candidates.reserve(static_cast<std::size_t>(total));
  std::vector<int> index(m, 0);
  Vector u(m);
  for (long long flat = 0; flat < total; ++flat) {
    for (int axis = 0; axis < m; ++axis) u(axis) = axis_value(axis, index[axis]);
    candidates.push_back({u, H(u)});
    for (int axis = m - 1; axis >= 0; --axis) {
      if (++index[axis] < points) break;
      index[axis] = 0;
    }
  }
  ArgminResult best = select(candidates, options.tie_tolerance);

  if (m == 1 && options.golden_refinement && points >= 2) {
    const double spacing = (hi(0) - lo(0)) / (points - 1);
    const double a = std::max(lo(0), best.u(0) - spacing);
    const double b = std::min(hi(0), best.u(0) + spacing);
    const Candidate refined = golden_section(H, a, b);
    if (refined.value < best.value - options.tie_tolerance) {
      best = {refined.u, refined.value};
    }
  }
  return best;
}

}  // namespace

ArgminStrategy parse_argmin_strategy(std::string_view name) {
  if (name == "grid") return ArgminStrategy::kGrid;
  if (name == "affine") return ArgminStrategy::kAffineBangBang;
  if (name == "finite") return ArgminStrategy::kFinite;
  throw InvalidArgument("unknown argmin strategy '" + std::string(name) + "'");
}

std::string to_string(ArgminStrategy strategy) {
  switch (strategy) {
    case ArgminStrategy::kGrid:
      return "grid";
    case ArgminStrategy::kAffineBangBang:
      return "affine";
    case ArgminStrategy::kFinite:
      return "finite";
  }
  return "grid";
}

ArgminOptions default_argmin_options(const OcpProblem& problem) {
  ArgminOptions options;
  if (problem.input_set.is_finite()) {
    options.strategy = ArgminStrategy::kFinite;
  } else if (problem.input_affine && problem.m == 1) {
    options.strategy = ArgminStrategy::kAffineBangBang;
  } else {
    options.strategy = ArgminStrategy::kGrid;
  }
  return options;
}

ArgminResult argmin_hamiltonian(const OcpProblem& problem,
                                const CandidateValueFunction& J,
                                const Vector& x, double t,
                                const ArgminOptions& options) {
  const HamiltonianAt H(problem, J, x, t);
  const InputSet& set = problem.input_set;
  switch (options.strategy) {
    case ArgminStrategy::kFinite:
      return finite_argmin(set.values(), H, options.tie_tolerance);
    case ArgminStrategy::kAffineBangBang:
      return affine_argmin(problem, H, options.tie_tolerance);
    case ArgminStrategy::kGrid:
      if (set.is_finite()) {
        return finite_argmin(set.values(), H, options.tie_tolerance);
      }
      return grid_argmin(problem, H, options);
  }
  throw InvalidArgument("unknown argmin strategy");
}

ControlLaw::ControlLaw(OcpProblem problem, CandidateValueFunction vf)
    : ControlLaw(problem, std::move(vf), default_argmin_options(problem)) {}

ControlLaw::ControlLaw(OcpProblem problem, CandidateValueFunction vf,
                       ArgminOptions options)
    : problem_(std::move(problem)), vf_(std::move(vf)), options_(options) {
  problem_.validate();
  if (!(options_.tie_tolerance > 0.0)) {
    throw InvalidArgument("tie_tolerance must be positive");
  }
  switch (options_.strategy) {
    case ArgminStrategy::kFinite:
      if (!problem_.input_set.is_finite()) {
        throw InvalidArgument("finite argmin needs a finite input set");
      }
      break;
    case ArgminStrategy::kAffineBangBang:
      if (!problem_.input_set.is_box() || problem_.m != 1) {
        throw InvalidArgument("affine argmin needs a scalar box input set");
      }
      break;
    case ArgminStrategy::kGrid:
      break;
  }
}

Vector synthesize_input(const ControlLaw& law, const Vector& x, double t) {
  return argmin_hamiltonian(law.problem(), law.source_vf(), x, t, law.options())
      .u;
}

double affine_coefficient(const ControlLaw& law, const Vector& x, double t) {
  const OcpProblem& problem = law.problem();
  if (!problem.input_set.is_box() || problem.m != 1) {
    throw InvalidArgument("affine coefficient needs a scalar box input set");
  }
  return affine_b(problem, HamiltonianAt(problem, law.source_vf(), x, t));
}

}  // namespace hjbgap
