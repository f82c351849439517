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

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "hjbgap/bounds.hpp"
#include "hjbgap/simulate.hpp"
#include "hjbgap/sweep.hpp"

namespace hjbgap {

inline constexpr const char* kSweepCsvHeader =
    "eps,loss_numeric,bound_formula,bound_grid,norm_estimate,steps,runtime_ms";
inline constexpr const char* kTrajectoryFigureCsvHeader = "eps,t,x,u,c";

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

/// Columns t, x (or x1..xn), u (or u1..um), c. The last row carries the
/// terminal state with empty input and cost fields.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

/// Scalar trajectories of a family, every `stride`-th step plus the final
/// state.
void write_family_trajectories_csv(std::ostream& out,
                                   std::span<const FamilyTrajectory> family,
                                   int stride);

nlohmann::json to_json(const NormGridSpec& grid);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const RolloutResult& result);

}  // namespace hjbgap
