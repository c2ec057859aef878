#include "entangle/error.hpp"

namespace entangle {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::ComplexRoots: return "ComplexRoots";
    case ErrorKind::ZeroState: return "ZeroState";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidFormat: return "InvalidFormat";
  }
  return "Unknown";
}

}  // namespace entangle
