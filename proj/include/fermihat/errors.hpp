#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fermihat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different numbers of fermion modes.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix has the wrong shape for the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A size guard (mode count, Fock dimension, sector index, norm bound) was violated.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An algebraic identity that an operation asserts did not hold.
class IdentityViolation : public Error {
 public:
  IdentityViolation(const std::string& what, double max_err)
      : Error(what + " (max_err=" + std::to_string(max_err) + ")"),
        max_err_(max_err) {}

  double max_err() const noexcept { return max_err_; }

 private:
  double max_err_;
};

/// Dense eigensolver failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Matrix logarithm requested for a matrix with an eigenvalue on the closed
/// negative real axis.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

/// Eigenvector basis too ill-conditioned for the diagonalization route.
class IllConditionedError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values produced (matrix exponential overflow).
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed expression text; carries the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        message_(message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// Expression refers to something that cannot be evaluated in the requested mode.
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fermihat
