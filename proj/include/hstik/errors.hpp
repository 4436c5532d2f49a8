#pragma once

#include <stdexcept>
#include <string>

namespace hstik {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A norm or power evaluation produced a non-finite value.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A parameter violated its precondition (alpha <= 0, mismatched lengths, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Argument outside the validity domain of a function (e.g. t > cutoff).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Target value outside the range of an inverted function.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// The sequential discrepancy search ran out of grid steps.
class NoCrossingError : public Error {
 public:
  using Error::Error;
};

/// Numerical invariant broken inside the library; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hstik
