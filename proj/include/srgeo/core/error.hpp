#pragma once

#include <stdexcept>
#include <string>

namespace srgeo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible band limits or grid sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Metric or cocycle parameters outside their admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A diffeomorphism lost monotonicity or a root could not be bracketed.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (literals, boundary conditions, residual checks).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Time integration produced non-finite values or lost monotonicity.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, double lastValidTime)
      : Error(what), lastValidTime_(lastValidTime) {}
  double lastValidTime() const noexcept { return lastValidTime_; }

 private:
  double lastValidTime_;
};

/// Shooting in the steering layer did not converge.
class SteeringError : public Error {
 public:
  SteeringError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace srgeo
