#pragma once

#include <stdexcept>
#include <string>

namespace symm {

/// Base of every error raised by the library. The CLI maps subclasses to
/// process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or closure grew past its configured budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An input violated the documented precondition of an operation.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A post-check failed. Signals a broken instance contract, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace symm
