#pragma once

#include <stdexcept>
#include <string>

namespace entcert {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes are incompatible with the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented invariant (non-Hermitian, wrong trace, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed state or map file.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Parameter outside the domain of a generator or scan.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Bad argument to a numerical routine (not enough moments, index too large).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Iterative kernel failed to converge or produced an inconsistent result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace entcert
