#include "aprings/error.hpp"

namespace aprings {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorKind::CarrierBoundExceeded: return "CarrierBoundExceeded";
    case ErrorKind::LengthBoundExceeded: return "LengthBoundExceeded";
    case ErrorKind::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorKind::NonIntegralPullback: return "NonIntegralPullback";
    case ErrorKind::R2Violation: return "R2Violation";
    case ErrorKind::ExponentMismatch: return "ExponentMismatch";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool Error::is_bound() const noexcept {
  switch (kind_) {
    case ErrorKind::BoundExceeded:
    case ErrorKind::OrderBoundExceeded:
    case ErrorKind::CarrierBoundExceeded:
    case ErrorKind::LengthBoundExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace aprings
