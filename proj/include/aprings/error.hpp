#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aprings {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  BoundExceeded,
  OrderBoundExceeded,
  CarrierBoundExceeded,
  LengthBoundExceeded,
  NonIntegerCoefficient,
  NonIntegralPullback,
  R2Violation,
  ExponentMismatch,
  Unsupported,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; `kind` lets callers
// (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

  // True for the resource-limit family (exit code 3 in the CLI).
  bool is_bound() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace aprings
