#pragma once

#include <stdexcept>
#include <string>

namespace cgasym {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain of an operation
/// (negative factorial argument, invalid quantum numbers, wrong region).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// beta^2 == 0: the quadratic stationary-phase formulas do not apply.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

class SingularError : public Error {
 public:
  using Error::Error;
};

/// The discarded imaginary part of a nominally real result was too large.
class ResidueError : public Error {
 public:
  using Error::Error;
};

/// An arc-cosine or arc-cosh argument left its admissible interval by more
/// than rounding slack.
class ArgumentRangeError : public Error {
 public:
  using Error::Error;
};

class MappingError : public Error {
 public:
  using Error::Error;
};

/// Magnitude not representable as binary64.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class CriticalRatioError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cgasym
