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

#include "hjbgap/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace hjbgap {
namespace {

// Shortest round-trip representation.
std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string indexed(const char* stem, int i, int count) {
  return count == 1 ? std::string(stem) : stem + std::to_string(i + 1);
}

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  const double nan = std::nan("");
  out << kSweepCsvHeader << '\n';
  for (const auto& rec : records) {
    const bool ok = !rec.error;
    out << num(rec.eps) << ',' << num(ok ? rec.loss_numeric : nan) << ','
        << num(ok ? rec.bound_formula : nan) << ','
        << num(ok ? rec.bound_grid : nan) << ','
        << num(ok ? rec.norm_estimate : nan) << ',' << rec.steps << ','
        << num(rec.runtime_ms) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  const int n = static_cast<int>(trajectory.states.front().size());
  const int m =
      trajectory.inputs.empty() ? 1 : static_cast<int>(trajectory.inputs.front().size());
  out << 't';
  for (int i = 0; i < n; ++i) out << ',' << indexed("x", i, n);
  for (int i = 0; i < m; ++i) out << ',' << indexed("u", i, m);
  out << ",c\n";
  for (std::size_t k = 0; k < trajectory.states.size(); ++k) {
    out << num(trajectory.times[k]);
    for (int i = 0; i < n; ++i) out << ',' << num(trajectory.states[k](i));
    const bool has_input = k < trajectory.inputs.size();
    for (int i = 0; i < m; ++i) {
      out << ',';
      if (has_input) out << num(trajectory.inputs[k](i));
    }
    out << ',';
    if (has_input) out << num(trajectory.running_cost_samples[k]);
    out << '\n';
  }
}

void write_family_trajectories_csv(std::ostream& out,
                                   std::span<const FamilyTrajectory> family,
                                   int stride) {
  if (stride < 1) throw InvalidArgument("trajectory stride must be positive");
  out << kTrajectoryFigureCsvHeader << '\n';
  for (const auto& member : family) {
    const Trajectory& traj = member.result.trajectory;
    const std::size_t last = traj.states.size() - 1;
    for (std::size_t k = 0; k <= last; ++k) {
      if (k % stride != 0 && k != last) continue;
      out << num(member.eps) << ',' << num(traj.times[k]) << ','
          << num(traj.states[k](0)) << ',';
      if (k < traj.inputs.size()) {
        out << num(traj.inputs[k](0)) << ','
            << num(traj.running_cost_samples[k]);
      } else {
        out << ',';
      }
      out << '\n';
    }
  }
}

nlohmann::json to_json(const NormGridSpec& grid) {
  return {{"state_points_per_axis", grid.state_points_per_axis},
          {"time_points", grid.time_points},
          {"offset", grid.offset}};
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json j = {{"R", report.R},
                      {"C", report.C},
                      {"sobolev_norm_estimate", report.sobolev_norm_estimate},
                      {"sobolev_bound", report.sobolev_bound},
                      {"worst_case_gap", optional_number(report.worst_case_gap)},
                      {"final_bound", report.final_bound},
                      {"grid", to_json(report.grid)}};
  j["warning"] = report.warning ? nlohmann::json(*report.warning)
                                : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const RolloutResult& result) {
  const Trajectory& traj = result.trajectory;
  nlohmann::json final_state = nlohmann::json::array();
  for (double v : traj.states.back()) final_state.push_back(v);
  return {{"total_cost", result.total_cost},
          {"loss", result.loss},
          {"vstar_at_origin_point", result.vstar_at_origin_point},
          {"steps", traj.steps()},
          {"final_state", final_state},
          {"max_state_norm", traj.max_state_norm()}};
}

}  // namespace hjbgap
