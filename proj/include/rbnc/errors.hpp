#pragma once

#include <stdexcept>
#include <string>

namespace rbnc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds an enumeration guard (Bell numbers, factorials, 2^|E|).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Operands live on ground sets / degrees of different sizes.
class DegreeMismatchError : public Error {
 public:
  using Error::Error;
};

/// mobius(sigma, pi) called with sigma not below pi.
class OrderViolationError : public Error {
 public:
  using Error::Error;
};

class MissingEdgeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal mathematical invariant failed. Seeing one means a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class SymmetryViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace rbnc
