#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entangle {

enum class ErrorKind {
  NotSquare,
  NotHermitian,
  ComplexRoots,
  ZeroState,
  DimensionMismatch,
  NotNormalized,
  ConstraintViolation,
  OutOfRange,
  NotUnitary,
  WrongDimension,
  LengthMismatch,
  InvalidFormat,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every precondition failure in the library is reported through this type.
// The kind lets callers (the CLI in particular) map failures to exit codes
// without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace entangle
