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

#include "hjbgap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "hjbgap/oracle.hpp"

namespace hjbgap {
namespace {

struct Maxima {
  double value = 0.0;
  Vector grad_x;
  double grad_t = 0.0;
  long long samples = 0;
  long long skipped = 0;
};

double axis_point(long long i, long long points, double lo, double hi,
                  bool offset) {
  if (offset) return lo + (static_cast<double>(i) + 0.5) * (hi - lo) / points;
  if (points == 1) return 0.5 * (lo + hi);
  if (i == points - 1) return hi;
  return lo + static_cast<double>(i) * (hi - lo) / (points - 1);
}

void accumulate(const CandidateValueFunction& J,
                const CandidateValueFunction& vstar, const Vector& x, double t,
                Maxima& out) {
  if (J.excluded(x, t) || vstar.excluded(x, t)) {
    ++out.skipped;
    return;
  }
  const Jet a = J.jet(x, t);
  const Jet b = vstar.jet(x, t);
  const double dv = std::abs(a.value - b.value);
  const double dt = std::abs(a.grad_t - b.grad_t);
  if (!std::isfinite(dv) || !std::isfinite(dt) || !a.grad_x.allFinite() ||
      !b.grad_x.allFinite()) {
    throw Error("nonfinite value-function error while estimating the norm");
  }
  out.value = std::max(out.value, dv);
  out.grad_t = std::max(out.grad_t, dt);
  out.grad_x = out.grad_x.cwiseMax((a.grad_x - b.grad_x).cwiseAbs());
  ++out.samples;
}

std::optional<std::string> resolution_warning(
    const CandidateValueFunction& vf, double spacing) {
  const auto wavelength = vf.oscillation_wavelength();
  if (!wavelength) return std::nullopt;
  const double per_wavelength = *wavelength / spacing;
  if (per_wavelength >= kSamplesPerWavelength) return std::nullopt;
  std::ostringstream msg;
  msg << "grid under-resolves '" << vf.name() << "': " << per_wavelength
      << " samples per wavelength (need " << kSamplesPerWavelength << ")";
  return msg.str();
}

}  // namespace

double bound_constant(const Vector& x0, double beta_f, double horizon) {
  if (!(beta_f > 0.0) || !(horizon > 0.0)) {
    throw InvalidArgument("bound_constant needs beta_f > 0 and T > 0");
  }
  const double growth =
      horizon * beta_f * (1.0 + x0.norm()) * std::exp(beta_f * horizon);
  return 2.0 * std::max({1.0, horizon, growth});
}

NormGridSpec resolve_grid(const NormGridSpec& base, double R,
                          std::optional<double> wavelength,
                          long long sample_budget) {
  NormGridSpec out = base;
  if (!wavelength) return out;
  const double needed =
      std::ceil(kSamplesPerWavelength * 2.0 * R / *wavelength) + 1.0;
  if (needed > out.state_points_per_axis) {
    if (needed > 2.0e9) {
      throw InvalidArgument("oscillation too fine to resolve on a grid");
    }
    out.state_points_per_axis = static_cast<int>(needed);
    const long long fit = sample_budget / out.state_points_per_axis;
    out.time_points = static_cast<int>(
        std::clamp<long long>(fit, 1, base.time_points));
  }
  return out;
}

NormEstimate sobolev_norm_estimate(const CandidateValueFunction& J,
                                   const CandidateValueFunction& vstar,
                                   double R, double horizon,
                                   const NormGridSpec& grid, int workers) {
  if (!(R > 0.0) || !(horizon > 0.0)) {
    throw InvalidArgument("norm estimate needs R > 0 and T > 0");
  }
  if (grid.state_points_per_axis < 1 || grid.time_points < 1) {
    throw InvalidArgument("norm grid needs at least one point per axis");
  }
  if (J.state_dim() != vstar.state_dim()) {
    throw InvalidArgument("value functions have different state dimensions");
  }
  const int n = J.state_dim();
  const long long per_axis = grid.state_points_per_axis;
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > (1LL << 40) / per_axis) {
      throw InvalidArgument("norm grid has too many points");
    }
    total *= per_axis;
  }

  if (workers <= 0) {
    workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  workers = static_cast<int>(std::min<long long>(workers, total));

  std::vector<Maxima> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  auto run = [&](int w) {
    Maxima& out = partial[w];
    out.grad_x = Vector::Zero(n);
    const long long begin = total * w / workers;
    const long long end = total * (w + 1) / workers;
    Vector x(n);
    for (long long flat = begin; flat < end; ++flat) {
      long long rest = flat;
      for (int axis = n - 1; axis >= 0; --axis) {
        x(axis) = axis_point(rest % per_axis, per_axis, -R, R, grid.offset);
        rest /= per_axis;
      }
      if (n > 1) {
        const double norm = x.norm();
        if (grid.offset ? norm >= R : norm > R) continue;
      }
      for (int j = 0; j < grid.time_points; ++j) {
        accumulate(J, vstar, x,
                   axis_point(j, grid.time_points, 0.0, horizon, grid.offset),
                   out);
      }
    }
  };

  std::vector<std::exception_ptr> errors(workers);
  for (int w = 1; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        run(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  try {
    run(0);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& th : threads) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Maxima merged;
  merged.grad_x = Vector::Zero(n);
  for (const auto& p : partial) {
    merged.value = std::max(merged.value, p.value);
    merged.grad_t = std::max(merged.grad_t, p.grad_t);
    merged.grad_x = merged.grad_x.cwiseMax(p.grad_x);
    merged.samples += p.samples;
    merged.skipped += p.skipped;
  }

  NormEstimate out;
  out.value_term = merged.value;
  out.grad_t_term = merged.grad_t;
  out.grad_x_terms.assign(merged.grad_x.begin(), merged.grad_x.end());
  out.samples = merged.samples;
  out.skipped = merged.skipped;
  out.value = out.value_term + out.grad_t_term;
  for (double g : out.grad_x_terms) out.value += g;

  const double spacing =
      grid.offset || per_axis == 1 ? 2.0 * R / per_axis : 2.0 * R / (per_axis - 1);
  out.warning = resolution_warning(J, spacing);
  if (!out.warning) out.warning = resolution_warning(vstar, spacing);
  return out;
}

double worst_case_gap(const OcpProblem& problem, const Vector& x0,
                      const WorstCaseOptions& options) {
  if (problem.worst_case_value && problem.optimal_value) {
    return std::max(0.0, problem.worst_case_value(x0, 0.0) -
                             problem.optimal_value(x0, 0.0));
  }
  if (!options.allow_oracle) {
    throw Unavailable("problem '" + problem.name +
                      "' has no closed-form worst-case value function");
  }
  if (problem.n != 1) {
    throw Unavailable("worst-case gap of '" + problem.name +
                      "' needs the DP oracle, which is 1-D only");
  }
  auto oracle_value = [&](DpMode mode) {
    const DpGrid grid = dp_solve(
        problem, default_dp_grid(problem, x0, mode, options.oracle_nx,
                                 options.oracle_nt));
    return dp_query(grid, x0(0), 0.0);
  };
  const double sup = problem.worst_case_value ? problem.worst_case_value(x0, 0.0)
                                              : oracle_value(DpMode::kSup);
  const double inf = problem.optimal_value ? problem.optimal_value(x0, 0.0)
                                           : oracle_value(DpMode::kInf);
  return std::max(0.0, sup - inf);
}

BoundReport performance_bound(const OcpProblem& problem,
                              const CandidateValueFunction& J,
                              const CandidateValueFunction& vstar,
                              const Vector& x0, const NormGridSpec& grid,
                              const WorstCaseOptions& options,
                              std::optional<double> known_worst_case_gap) {
  problem.validate();
  BoundReport report;
  report.grid = grid;
  report.R = reachable_radius(x0, problem.constants.beta_f, problem.horizon);
  report.C = bound_constant(x0, problem.constants.beta_f, problem.horizon);
  const NormEstimate norm =
      sobolev_norm_estimate(J, vstar, report.R, problem.horizon, grid);
  report.sobolev_norm_estimate = norm.value;
  report.sobolev_bound = report.C * norm.value;
  report.warning = norm.warning;
  if (known_worst_case_gap) {
    report.worst_case_gap = known_worst_case_gap;
  } else {
    try {
      report.worst_case_gap = worst_case_gap(problem, x0, options);
    } catch (const Unavailable&) {
      report.worst_case_gap.reset();
    }
  }
  report.final_bound = report.sobolev_bound;
  if (report.worst_case_gap) {
    report.final_bound = std::min(report.final_bound, *report.worst_case_gap);
  }
  return report;
}

}  // namespace hjbgap
