#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgrass {

// Root of every error the library raises. Each subclass maps onto one
// distinct CLI exit status (see tools/cli/exit_codes.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different coefficient fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Shapes or lengths do not agree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Polynomial text does not match the grammar. `position` is a 0-based byte
// offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An enumeration would visit more candidates than the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Randomized sampling could not produce a member within its retry budget.
class SamplerStarvation : public Error {
 public:
  using Error::Error;
};

// Raised when two independent computations of the same quantity disagree.
// Seeing one of these means a bug in this library.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace qgrass
