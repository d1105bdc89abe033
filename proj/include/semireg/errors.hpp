#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semireg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValidationRule {
  Malformed,
  BadParameters,
  DimensionMismatch,
  NegativeCoordinate,
  NonHomogeneous,
  Duplicate,
  MissingCorner,
  EmptyInterior,
};

std::string_view to_string(ValidationRule rule);

/// Input does not describe a standard-form simplicial semigroup.
class ValidationError : public Error {
 public:
  ValidationError(ValidationRule rule, const std::string& detail)
      : Error(std::string(to_string(rule)) + ": " + detail), rule_(rule) {}

  ValidationRule rule() const noexcept { return rule_; }

 private:
  ValidationRule rule_;
};

/// A configured enumeration or subset cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A proven invariant failed to hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace semireg
