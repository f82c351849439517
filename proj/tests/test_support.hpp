// Independent reference computations for the test suites. Nothing here goes
// through the library's Hamiltonian, argmin or integrator code paths.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "hjbgap/types.hpp"

namespace hjbgap::testing {

inline constexpr double kE = std::numbers::e;

inline Vector v1(double x) { return scalar_vector(x); }

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// Example 2 Hamiltonian of V_eps = x^2 (T - t) + eps x, typed in by hand
// (eps = 0 gives V*). T = 1.
inline double example2_h(double eps, double t, double x, double u) {
  const double s = 1.0 - t;
  const double grad_t = -x * x;
  const double grad_x = 2.0 * x * s + eps;
  const double c = (1.0 + 2.0 * s) * x * x + 2.0 * s * std::abs(x);
  return grad_t + c + grad_x * (-x + u);
}

// Closed form of inf_{|u| <= 1} example2_h: the u-term contributes -|grad_x|.
inline double example2_h_tilde(double eps, double t, double x) {
  const double s = 1.0 - t;
  return -x * x + (1.0 + 2.0 * s) * x * x + 2.0 * s * std::abs(x) -
         (2.0 * x * s + eps) * x - std::abs(2.0 * x * s + eps);
}

// Brute-force minimum over a dense uniform grid of [lo, hi].
inline double brute_min(const std::function<double(double)>& f, double lo,
                        double hi, int points = 20001) {
  double best = INFINITY;
  for (int i = 0; i < points; ++i) {
    best = std::min(best, f(lo + (hi - lo) * i / (points - 1)));
  }
  return best;
}

// Composite Simpson rule.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int intervals = 20000) {
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Example 2 worst case: |x(t)| <= 1 - e^{-t} for every admissible input and
// c grows with |x|, so u = 1 maximizes the cost from x0 = 0.
inline double example2_worst_case_from_origin() {
  return simpson(
      [](double t) {
        const double x = 1.0 - std::exp(-t);
        const double s = 1.0 - t;
        return (1.0 + 2.0 * s) * x * x + 2.0 * s * x;
      },
      0.0, 1.0);
}

inline std::mt19937_64 rng(std::uint64_t seed = 20261014) {
  return std::mt19937_64(seed);
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

}  // namespace hjbgap::testing
