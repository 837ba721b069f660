#pragma once

#include <stdexcept>
#include <string>

namespace infogeo {

// Point or argument outside the open domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Differentiation or linear algebra produced a non-finite or singular result.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Operation invoked on input that does not satisfy its stated precondition
// (e.g. metric extraction from a function that is not a divergence at p).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Malformed or inconsistent run configuration.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Output could not be written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace infogeo
