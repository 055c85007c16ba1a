#pragma once

#include <stdexcept>
#include <string>

namespace tfloc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (negative t, zero window, p out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Lattice index or shift outside the computation box.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The torus grid is too coarse to integrate the requested trigonometric
/// polynomial exactly; raised instead of returning an approximation.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Near-singular reconstruction constant.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// Supremum that does not exist on the search range.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes disagree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Dense linear algebra or cross-check failure.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration, unknown identifier or malformed file.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace tfloc
