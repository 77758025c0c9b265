#pragma once

#include <stdexcept>
#include <string>

namespace nlpl {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (bad field value, unknown key, inconsistent block).
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// A source function evaluated to a non-finite value.
struct EvaluationError : Error {
  EvaluationError(const std::string& what, double xi_) : Error(what), xi(xi_) {}
  double xi;
};

// The quadrature of f(u) fell below its positive floor; the lower bound
// sigma <= f must have been violated upstream.
struct DegeneracyError : Error {
  DegeneracyError(const std::string& what, double integral_, double floor_)
      : Error(what), integral(integral_), floor(floor_) {}
  double integral;
  double floor;
};

// Arithmetic left the representable range (e.g. (k0+p)^p overflowed).
struct RangeError : Error {
  explicit RangeError(const std::string& what) : Error(what) {}
};

// Finite-time divergence of a trajectory. Threshold experiments catch this
// and treat it as data, not only as failure.
struct BlowUpError : Error {
  BlowUpError(const std::string& what, long step_, double time_)
      : Error(what), step(step_), time(time_) {}
  long step;
  double time;
};

// An implicit solve did not reach its tolerance.
struct SolverError : Error {
  SolverError(const std::string& what, double residual_)
      : Error(what), residual(residual_) {}
  double residual;
};

}  // namespace nlpl
