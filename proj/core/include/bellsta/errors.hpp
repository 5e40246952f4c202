#pragma once

#include <stdexcept>
#include <string>

namespace bellsta {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input: parameter values, configuration keys, file paths,
/// dimension mismatches. Maps to CLI exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure at run time: non-convergent integration, singular
/// design systems, degenerate evaluation points. Maps to CLI exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bellsta
