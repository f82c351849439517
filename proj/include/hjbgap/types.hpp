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

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace hjbgap {

/// Largest supported state or input dimension. Vectors keep their storage
/// inline so that value-function evaluation in tight loops never allocates.
inline constexpr int kMaxDim = 16;

using Vector =
    Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

inline Vector scalar_vector(double v) {
  Vector x(1);
  x(0) = v;
  return x;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A gradient was requested on a differentiability exclusion with no
/// fallback configured.
class GradientUndefined : public Error {
 public:
  using Error::Error;
};

class NonAffineHamiltonian : public Error {
 public:
  using Error::Error;
};

class EmptyCandidates : public Error {
 public:
  using Error::Error;
};

class NonfiniteState : public Error {
 public:
  NonfiniteState(const std::string& what, int step) : Error(what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

class InfeasibleInput : public Error {
 public:
  using Error::Error;
};

class DomainTooSmall : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Requested quantity has neither an analytic form nor an enabled oracle.
class Unavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace hjbgap
