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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hjbgap/bounds.hpp"
#include "hjbgap/controller.hpp"
#include "hjbgap/examples.hpp"
#include "hjbgap/oracle.hpp"
#include "hjbgap/simulate.hpp"
#include "hjbgap/sweep.hpp"
#include "test_support.hpp"

using namespace hjbgap;
using namespace hjbgap::testing;

namespace {

constexpr double kTol = kSimulationTolerance;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  Outcome() { detail.precision(10); }

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void run(int id, const char* title, double max_seconds,
         const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (max_seconds > 0.0 && secs > max_seconds) {
    out.pass = false;
    out.detail << " [runtime " << secs << " s exceeds " << max_seconds << " s]";
  }
  if (!out.pass) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s\n", out.pass ? "PASS" : "FAIL", id,
              title, secs, out.detail.str().c_str());
  std::fflush(stdout);
}

const SweepRecord* find(const std::vector<SweepRecord>& recs, double eps) {
  for (const auto& r : recs) {
    if (std::abs(r.eps - eps) <= 1e-12 * eps) return &r;
  }
  return nullptr;
}

struct RolloutCheck {
  std::string label;
  const std::vector<SweepRecord>* records;
};

}  // namespace

int main() {
  const ExampleSuite ex1 = example1();
  const ExampleSuite ex2 = example2();

  run(1, "constants exactness", 1.0, [&](Outcome& o) {
    const double C = bound_constant(v1(1.0), 1.0, 1.0);
    const double R = reachable_radius(v1(0.0), 1.0, 1.0);
    o.detail << " C=" << C << " R=" << R;
    o.require(rel_err(C, 4.0 * kE) <= 1e-12, "C = 4e");
    o.require(rel_err(R, kE - 1.0) <= 1e-12, "R = e - 1");
  });

  run(2, "HJB residual of analytic vstar", 1.0, [&](Outcome& o) {
    for (const ExampleSuite* ex : {&ex1, &ex2}) {
      const double R = reachable_radius(ex->default_x0, 1.0, 1.0);
      auto gen = rng(2);
      double worst = 0.0;
      int checked = 0;
      while (checked < 10000) {
        const Vector x = v1(uniform(gen, -R, R));
        const double t = uniform(gen, 0.0, 1.0);
        if (ex->vstar.excluded(x, t)) continue;
        worst = std::max(worst, std::abs(h_tilde(ex->problem, ex->vstar, x, t)));
        ++checked;
      }
      o.detail << " " << ex->problem.name << " max|h|=" << worst;
      o.require(worst <= 1e-8, ex->problem.name + " residual");
    }
  });

  run(3, "DP oracle agreement", 60.0, [&](Outcome& o) {
    auto solve = [](const OcpProblem& p, DpMode mode) {
      DpGrid g;
      g.mode = mode;
      return dp_solve(p, g);
    };
    const double a = dp_query(solve(ex1.problem, DpMode::kInf), 1.0, 0.0);
    const double b = dp_query(solve(ex1.problem, DpMode::kSup), 1.0, 0.0);
    const double c = dp_query(solve(ex2.problem, DpMode::kInf), 0.5, 0.0);
    o.detail << " V1*(1,0)=" << a << " W1(1,0)=" << b << " V2*(0.5,0)=" << c;
    o.require(std::abs(a - std::exp(-1.0)) <= 5e-3, "example1 inf");
    o.require(std::abs(b - kE) <= 5e-3, "example1 sup");
    o.require(std::abs(c - 0.25) <= 5e-3, "example2 inf");
  });

  SweepOptions sweep;
  sweep.steps = kDefaultSteps;

  std::vector<SweepRecord> veps, v2, v1s;

  run(4, "Example 2 bound soundness and convergence", 30.0, [&](Outcome& o) {
    veps = run_sweep(ex2, "veps", {0.5, 0.1, 0.05, 0.01, 0.005, 0.001},
                     v1(0.0), sweep);
    for (const auto& r : veps) {
      o.require(!r.error, "record error");
      if (r.error) continue;
      o.detail << " eps=" << r.eps << ":" << r.loss_numeric;
      o.require(r.loss_numeric >= -kTol, "loss >= -tol");
      o.require(r.loss_numeric <= 2.0 * kE * kE * r.eps + kTol, "loss <= 2e^2 eps");
    }
    const SweepRecord* last = find(veps, 0.001);
    o.require(last && last->loss_numeric <= 0.05, "loss(1e-3) <= 0.05");
  });

  run(5, "Example 1 second candidate converges", 30.0, [&](Outcome& o) {
    v2 = run_sweep(ex1, "v2", {}, v1(1.0), sweep);
    const double gap = kE - std::exp(-1.0);
    for (const auto& r : v2) {
      o.require(!r.error, "record error");
      if (r.error) continue;
      o.detail << " eps=" << r.eps << ":" << r.loss_numeric;
      const double bound =
          std::min(4.0 * kE * (1.0 + 1e6) * r.eps * r.eps, gap);
      o.require(r.loss_numeric <= bound + kTol, "loss <= bound");
    }
    const SweepRecord* last = find(v2, 1e-4);
    o.require(last && last->loss_numeric <= 0.11, "loss(1e-4) <= 0.11");
  });

  run(6, "Example 1 first candidate does not converge", 30.0, [&](Outcome& o) {
    v1s = run_sweep(ex1, "v1", {1e-2, 1e-3, 1e-4}, v1(1.0), sweep);
    const SweepRecord* ref = find(v2, 1e-4);
    o.require(ref != nullptr, "v2 loss at 1e-4 available");
    for (const auto& r : v1s) {
      o.require(!r.error, "record error");
      if (r.error) continue;
      o.detail << " eps=" << r.eps << ":" << r.loss_numeric;
      o.require(r.loss_numeric >= 0.05, "loss >= 0.05");
      if (ref) o.require(r.loss_numeric >= 10.0 * ref->loss_numeric, ">= 10x v2");
    }
  });

  run(7, "Sobolev estimator accuracy", 120.0, [&](Outcome& o) {
    const double Ra = reachable_radius(v1(0.0), 1.0, 1.0);
    const auto a = sobolev_norm_estimate(ex2.candidate("veps", 0.01), ex2.vstar,
                                         Ra, 1.0, NormGridSpec{});
    const double exact_a = 0.01 * kE;
    o.detail << " veps=" << a.value << " (analytic " << exact_a << ")";
    o.require(std::abs(a.value - exact_a) <= 0.02 * exact_a, "veps within 2%");
    o.require(a.value <= exact_a + 1e-12, "veps not above analytic");

    const double Rb = reachable_radius(v1(1.0), 1.0, 1.0);
    const auto J = ex1.candidate("v2", 0.01);
    const NormGridSpec nyquist{80'000'000, 1, true};
    const auto b = sobolev_norm_estimate(J, ex1.vstar, Rb, 1.0, nyquist);
    const double exact_b = (1.0 + 1e6) * 1e-4;
    o.detail << " v2=" << b.value << " (analytic " << exact_b << ")";
    o.require(!b.warning, "grid resolves the oscillation");
    o.require(std::abs(b.value - exact_b) <= 0.05 * exact_b, "v2 within 5%");
    o.require(b.value <= exact_b + 1e-12, "v2 not above analytic");
  });

  run(8, "closed loop is optimal for the modified costs", 30.0, [&](Outcome& o) {
    const auto J = ex2.candidate("veps", 0.1);
    const ControlLaw law(ex2.problem, J);
    const auto closed =
        rollout_closed_loop(ex2.problem, law, v1(0.0), kDefaultSteps);
    const double best = modified_cost_of(closed, ex2.problem, J);
    auto gen = rng(8);
    double margin = INFINITY;
    for (int k = 0; k < 100; ++k) {
      const int pieces = 1 + static_cast<int>(uniform(gen, 0.0, 50.0));
      std::vector<double> levels(pieces);
      for (auto& l : levels) l = uniform(gen, -1.0, 1.0);
      std::vector<Vector> inputs;
      inputs.reserve(kDefaultSteps);
      for (int i = 0; i < kDefaultSteps; ++i) {
        inputs.push_back(v1(levels[static_cast<long long>(i) * pieces / kDefaultSteps]));
      }
      const auto open = rollout_open_loop(ex2.problem, inputs, v1(0.0));
      margin = std::min(margin, modified_cost_of(open, ex2.problem, J) - best);
    }
    o.detail << " closed=" << best << " min margin=" << margin;
    o.require(margin >= -kTol, "closed <= open + tol");
  });

  run(9, "global soundness over criteria 4-6", 0.0, [&](Outcome& o) {
    int rollouts = 0;
    for (const RolloutCheck& c : {RolloutCheck{"veps", &veps}, RolloutCheck{"v2", &v2},
                                  RolloutCheck{"v1", &v1s}}) {
      o.require(!c.records->empty(), c.label + " sweep ran");
      for (const auto& r : *c.records) {
        o.require(!r.error, c.label + " record error");
        if (r.error) continue;
        ++rollouts;
        o.require(r.loss_numeric >= -kTol, c.label + " loss >= -tol");
        o.require(r.loss_numeric <= r.bound_grid + kTol, c.label + " loss <= final_bound");
        o.require(r.max_state_norm <= r.reachable_radius + kTol,
                  c.label + " Gronwall containment");
      }
    }
    o.detail << " rollouts=" << rollouts;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
