#ifndef SPDKIT_ERRORS_HPP
#define SPDKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spdkit {

// Shape/length mismatch between an argument and what the callee expects.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix entry violates the sparsity pattern of the active index map.
class PatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative numerical routine failed to converge.  Carries the residual
// at the point of failure.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

// API misuse, e.g. backward called without a forward cache.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Bad configuration value (epochs = 0, empty split, unknown name, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file (CSV or serialized model).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spdkit

#endif  // SPDKIT_ERRORS_HPP
