#pragma once

#include <stdexcept>
#include <string>

namespace hermite {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or incomplete input data.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Query outside the domain an operation is defined on (extrapolation,
/// a coordinate that is not a grid node, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Power-series inversion of a polynomial that vanishes at the expansion point.
class SingularInversionError : public Error {
 public:
  using Error::Error;
};

class SystemTooLargeError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity failed a numeric cross-check.
class NumericValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hermite
