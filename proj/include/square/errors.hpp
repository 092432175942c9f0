#pragma once

#include <stdexcept>
#include <string>

namespace square {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: CSV parse failures, pattern violations, bad configuration.
class DataError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: singular designs, leverage blowups, solver non-convergence.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace square
