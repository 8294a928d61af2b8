#pragma once

#include <stdexcept>
#include <string>

namespace wbm {

/// Argument outside the domain of a mathematical function (e.g. Y0 at 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Boundary curve whose derivative vanishes where a normal is requested.
class DegenerateCurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise unusable numerical input to a solver.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wbm
