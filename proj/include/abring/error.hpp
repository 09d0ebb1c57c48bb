#pragma once

#include <stdexcept>
#include <string>

namespace abring {

// Numeric values line up with the C API status codes and the CLI exit codes.
enum class ErrorKind : int {
  Domain = 5,
  Config = 2,
  NoBoundState = 3,
  Numerical = 4,
  InvalidArgument = 7,
  Io = 6,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

struct NoBoundStateError : Error {
  explicit NoBoundStateError(const std::string& what) : Error(ErrorKind::NoBoundState, what) {}
};

struct NumericalError : Error {
  explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

/// Adaptive quadrature that ran out of refinement levels. The last estimate is kept
/// so callers can decide whether it is usable.
struct ConvergenceError : NumericalError {
  ConvergenceError(const std::string& what, double last_estimate, double last_error)
      : NumericalError(what), last_estimate(last_estimate), last_error(last_error) {}
  double last_estimate;
  double last_error;
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace abring
