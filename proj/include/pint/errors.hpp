#pragma once

#include <stdexcept>
#include <string>

namespace pint {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid strip geometry or mesh input.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument or configuration (divisibility, positivity, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Element-level assembly failure (degenerate element).
class AssemblyError : public Error {
 public:
  using Error::Error;
};

/// Linear solver did not meet its residual contract.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual)
      : Error(what), final_residual(residual) {}

  double final_residual;
};

/// Operation not available for the requested configuration.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// File I/O failure, message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pint
