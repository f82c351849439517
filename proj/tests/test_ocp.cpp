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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hjbgap/controller.hpp"
#include "hjbgap/examples.hpp"
#include "hjbgap/ocp.hpp"
#include "test_support.hpp"

using namespace hjbgap;
using namespace hjbgap::testing;

TEST_CASE("Example 2 Hamiltonian of vstar vanishes at the optimal input") {
  const auto ex = example2();
  CHECK(hamiltonian(ex.problem, ex.vstar, 0.0, v1(1.0), v1(-1.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  auto gen = rng();
  for (int i = 0; i < 2000; ++i) {
    const double t = uniform(gen, 0.0, 1.0);
    const double x = uniform(gen, -3.0, 3.0);
    const double u = uniform(gen, -1.0, 1.0);
    const double h = hamiltonian(ex.problem, ex.vstar, t, v1(x), v1(u));
    CHECK(h >= -1e-12);
    CHECK(h == doctest::Approx(example2_h(0.0, t, x, u)).epsilon(1e-12));
  }
}

TEST_CASE("Example 2 Hamiltonian of veps matches the hand expansion") {
  const auto ex = example2();
  const auto J = ex.candidate("veps", 0.1);
  CHECK(hamiltonian(ex.problem, J, 0.0, v1(1.0), v1(-1.0)) ==
        doctest::Approx(-0.2).epsilon(1e-12));
  CHECK(h_tilde(ex.problem, J, v1(1.0), 0.0) ==
        doctest::Approx(-0.2).epsilon(1e-12));
  auto gen = rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double t = uniform(gen, 0.0, 1.0);
    const double x = uniform(gen, 0.0, 3.0);
    CHECK(h_tilde(ex.problem, J, v1(x), t) ==
          doctest::Approx(-0.1 * (1.0 + x)).epsilon(1e-9));
    const double xn = uniform(gen, -3.0, 3.0);
    CHECK(h_tilde(ex.problem, J, v1(xn), t) ==
          doctest::Approx(example2_h_tilde(0.1, t, xn)).epsilon(1e-9));
  }
}

TEST_CASE("HJB residual of vstar is zero in both examples") {
  for (const auto& ex : {example1(), example2()}) {
    const double R = reachable_radius(ex.default_x0, 1.0, 1.0);
    auto gen = rng(11);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const Vector x = v1(uniform(gen, -R, R));
      const double t = uniform(gen, 0.0, 1.0);
      if (ex.vstar.excluded(x, t)) continue;
      worst = std::max(worst, std::abs(h_tilde(ex.problem, ex.vstar, x, t)));
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("h_tilde lower-bounds the Hamiltonian at every sampled input") {
  const auto ex1 = example1();
  const auto ex2 = example2();
  auto gen = rng(3);
  for (int i = 0; i < 500; ++i) {
    const double eps = std::pow(10.0, uniform(gen, -4.0, -0.3));
    const double t = uniform(gen, 0.0, 1.0);
    const Vector x = v1(uniform(gen, -2.0, 2.0));
    const Vector u = v1(uniform(gen, -1.0, 1.0));
    for (const auto* ex : {&ex1, &ex2}) {
      for (const auto& fam : ex->families) {
        const auto J = fam.make(eps);
        CHECK(h_tilde(ex->problem, J, x, t) <=
              hamiltonian(ex->problem, J, t, x, u) + 1e-12);
      }
    }
  }
}

TEST_CASE("h_tilde agrees with a brute-force minimum on a non-affine problem") {
  OcpProblem p;
  p.name = "quadratic";
  p.dynamics = [](double, const Vector& x, const Vector& u) {
    return Vector(x + u);
  };
  p.running_cost = [](double, const Vector& x, const Vector& u) {
    return x(0) * x(0) + u(0) * u(0);
  };
  p.terminal_cost = [](const Vector&) { return 0.0; };
  const auto J = CandidateValueFunction::analytic(
      "quad", [](const Vector& x, double t) { return (1 - t) * x(0) * x(0); },
      [](const Vector& x, double t) {
        return Jet{(1 - t) * x(0) * x(0), v1(2 * (1 - t) * x(0)), -x(0) * x(0)};
      });
  for (double x : {-1.3, -0.2, 0.0, 0.4, 0.9}) {
    const double t = 0.3;
    const double g = 2 * (1 - t) * x;
    const double ref = brute_min(
        [&](double u) { return -x * x + x * x + u * u + g * (x + u); }, -1.0,
        1.0, 200001);
    CHECK(h_tilde(p, J, v1(x), t) == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("modified costs") {
  const auto ex = example2();
  const auto exact = modified_costs(ex.problem, ex.vstar);
  const auto veps = modified_costs(ex.problem, ex.candidate("veps", 0.1));
  auto gen = rng(5);
  for (int i = 0; i < 300; ++i) {
    const double t = uniform(gen, 0.0, 1.0);
    const Vector x = v1(uniform(gen, -2.0, 2.0));
    const Vector xp = v1(uniform(gen, 0.0, 2.0));
    const Vector u = v1(uniform(gen, -1.0, 1.0));
    CHECK(exact.running_cost(t, x, u) ==
          doctest::Approx(ex.problem.running_cost(t, x, u)).epsilon(1e-9));
    CHECK(exact.terminal_cost(x) == doctest::Approx(0.0));
    CHECK(veps.running_cost(t, xp, u) ==
          doctest::Approx(ex.problem.running_cost(t, xp, u) +
                          0.1 * (1.0 + xp(0)))
              .epsilon(1e-9));
    CHECK(veps.terminal_cost(x) == doctest::Approx(0.1 * x(0)).epsilon(1e-12));
  }
}

TEST_CASE("reachable radius") {
  CHECK(reachable_radius(v1(0.0), 1.0, 1.0) ==
        doctest::Approx(kE - 1.0).epsilon(1e-12));
  CHECK(reachable_radius(v1(1.0), 1.0, 1.0) ==
        doctest::Approx(2 * kE - 1.0).epsilon(1e-12));
  Vector x2(2);
  x2 << 3.0, 4.0;
  CHECK(reachable_radius(x2, 0.5, 2.0) ==
        doctest::Approx(6.0 * kE - 1.0).epsilon(1e-12));

  auto gen = rng(9);
  for (int i = 0; i < 500; ++i) {
    const double n = uniform(gen, 0.0, 3.0);
    const double b = uniform(gen, 0.01, 2.0);
    const double T = uniform(gen, 0.01, 2.0);
    const double d = uniform(gen, 1e-3, 0.5);
    const double r = reachable_radius(v1(n), b, T);
    CHECK(reachable_radius(v1(n + d), b, T) > r);
    CHECK(reachable_radius(v1(n), b + d, T) > r);
    CHECK(reachable_radius(v1(n), b, T + d) > r);
  }
  CHECK_THROWS_AS(reachable_radius(v1(0.0), -1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(reachable_radius(v1(0.0), 1.0, -1.0), InvalidArgument);
}

TEST_CASE("finite-difference gradients match analytic ones") {
  auto gen = rng(13);
  for (const auto& ex : {example1(), example2()}) {
    for (const auto& fam : ex.families) {
      for (double eps : {0.5, 0.1, 0.01}) {
        if (fam.name == "v2") continue;  // 1e6 rad/unit is beyond h = 1e-5
        const auto J = fam.make(eps);
        for (int i = 0; i < 200; ++i) {
          const Vector x = v1(uniform(gen, -2.0, 2.0));
          const double t = uniform(gen, 0.0, 1.0);
          if (std::abs(x(0)) < 1e-3) continue;
          const Jet a = J.jet(x, t);
          const Jet f = J.finite_difference_jet(x, t, 1e-5);
          const double scale_x = std::max(std::abs(a.grad_x(0)), 1.0);
          const double scale_t = std::max(std::abs(a.grad_t), 1.0);
          CHECK(std::abs(f.grad_x(0) - a.grad_x(0)) / scale_x <= 1e-4);
          CHECK(std::abs(f.grad_t - a.grad_t) / scale_t <= 1e-4);
        }
      }
    }
  }
}

TEST_CASE("finite-difference value function") {
  const auto J = CandidateValueFunction::finite_difference(
      "cubic", [](const Vector& x, double t) {
        return x(0) * x(0) * x(0) + t * x(1);
      }, 2);
  Vector x(2);
  x << 2.0, -1.5;
  const Jet jet = J.jet(x, 0.5);
  CHECK_FALSE(J.has_analytic_gradients());
  CHECK(jet.grad_x(0) == doctest::Approx(12.0).epsilon(1e-8));
  CHECK(jet.grad_x(1) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(jet.grad_t == doctest::Approx(-1.5).epsilon(1e-8));
}

TEST_CASE("exclusion policies") {
  const auto ex = example1();
  const Vector zero = v1(0.0);
  CHECK(ex.vstar.excluded(zero, 0.3));
  CHECK(ex.vstar.jet(zero, 0.3).grad_x(0) == 0.0);

  const auto strict =
      ex.vstar.with_exclusions([](const Vector& x, double) { return x(0) == 0; },
                               ExclusionPolicy::kError);
  CHECK_THROWS_AS(strict.jet(zero, 0.3), GradientUndefined);
  CHECK_NOTHROW(strict.jet(v1(0.5), 0.3));

  const auto fd = ex.vstar.with_exclusions(
      [](const Vector& x, double) { return x(0) == 0; },
      ExclusionPolicy::kFiniteDifference);
  // Central difference across the kink averages the one-sided slopes.
  const double slope = fd.jet(zero, 0.0).grad_x(0);
  CHECK(slope == doctest::Approx(0.5 * (std::exp(-1.0) + kE)).epsilon(1e-6));
}

TEST_CASE("Example 1 class-L growth check") {
  const auto ex = example1();
  auto gen = rng(17);
  for (int i = 0; i < 2000; ++i) {
    const Vector x = v1(uniform(gen, -10.0, 10.0));
    const Vector u = v1(uniform(gen, -1.0, 1.0));
    const double t = uniform(gen, 0.0, 1.0);
    CHECK(ex.problem.dynamics(t, x, u).norm() <=
          ex.problem.constants.beta_f * (1.0 + x.norm()) + 1e-12);
  }
}

TEST_CASE("input sets") {
  const auto box = InputSet::interval(-1.0, 1.0);
  CHECK(box.is_box());
  CHECK(box.contains(v1(1.0)));
  CHECK_FALSE(box.contains(v1(1.0 + 1e-9)));
  CHECK(box.contains(v1(1.0 + 1e-9), 1e-8));
  CHECK(box.grid_points_per_axis() == 101);
  CHECK(box.with_grid_points(7).grid_points_per_axis() == 7);
  CHECK(box.smallest_norm_point()(0) == 0.0);
  CHECK(InputSet::interval(0.5, 2.0).smallest_norm_point()(0) == 0.5);

  const auto fin = InputSet::finite({v1(2.0), v1(-3.0)});
  CHECK(fin.is_finite());
  CHECK(fin.contains(v1(-3.0)));
  CHECK_FALSE(fin.contains(v1(0.0)));
  CHECK(fin.smallest_norm_point()(0) == 2.0);
  CHECK_THROWS_AS(InputSet::finite({}), EmptyCandidates);
  CHECK_THROWS_AS(InputSet::interval(1.0, -1.0), InvalidArgument);

  CHECK(tie_break_less(v1(0.5), v1(-1.0)));
  CHECK(tie_break_less(v1(-1.0), v1(1.0)));
  CHECK_FALSE(tie_break_less(v1(1.0), v1(-1.0)));
}

TEST_CASE("problem validation") {
  auto p = example2().problem;
  CHECK_NOTHROW(p.validate());
  p.horizon = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidArgument);
  p = example2().problem;
  p.dynamics = nullptr;
  CHECK_THROWS_AS(p.validate(), InvalidArgument);
  p = example2().problem;
  p.m = 2;
  CHECK_THROWS_AS(p.validate(), InvalidArgument);
}
