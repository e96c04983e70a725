#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph file, bad element serialization, bad ids.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A path enumeration could be infinite (a cycle reaches the target).
/// Callers may retry with an explicit length bound.
class InfiniteEnumeration : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The graph has a cycle with an exit, so no block decomposition exists.
class NoExitViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Arithmetic misuse: division by zero, inverting a non-unit, mixing rings.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different algebras (graphs, block structures, bases).
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lpa
