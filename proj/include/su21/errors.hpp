#pragma once

#include <stdexcept>
#include <string>

namespace su21 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero or another operation on a degenerate value.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A parameter violates a documented precondition (parity, range, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The n = 1 vertex system was asked for both products without the extra datum.
class UnderdeterminedVertex : public Error {
 public:
  using Error::Error;
};

/// A vertex module was requested with a truncation that excludes its vertex.
class EmptyTruncation : public Error {
 public:
  using Error::Error;
};

/// A vector referenced a basis index outside the truncated module.
class InvalidBasisIndex : public Error {
 public:
  using Error::Error;
};

/// Two norm recursion paths disagreed.
class InconsistentGauge : public Error {
 public:
  using Error::Error;
};

/// Norm recursion produced a value that is not a positive real.
class NonUnitaryModule : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (rationals, labels, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace su21
