// Copyright 2026 The nstaylor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace nst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live on different grids.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// Poisson source violates the solvability condition (nonzero mean on the torus).
class IncompatibleSourceError : public Error {
 public:
  using Error::Error;
};

/// A field has Fourier support that the target grid cannot represent.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Input contains NaN or infinity.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Requested Taylor order is invalid or lower orders are missing.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// Too few nonzero coefficient norms to estimate a radius of convergence.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// The divergence constraint failed at a given Taylor order.
class DivergenceError : public Error {
 public:
  DivergenceError(int order, double value, double tolerance)
      : Error("divergence " + std::to_string(value) + " exceeds tolerance " +
              std::to_string(tolerance) + " at order " + std::to_string(order)),
        order_(order),
        value_(value),
        tolerance_(tolerance) {}

  int order() const noexcept { return order_; }
  double value() const noexcept { return value_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  int order_;
  double value_;
  double tolerance_;
};

/// Failure while computing a given Taylor order.
class EngineError : public Error {
 public:
  EngineError(int order, const std::string& what)
      : Error("order " + std::to_string(order) + ": " + what), order_(order) {}

  int order() const noexcept { return order_; }

 private:
  int order_;
};

}  // namespace nst
