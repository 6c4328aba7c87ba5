#pragma once

#include <functional>
#include <optional>
#include <random>

#include "aprings/error.hpp"

namespace testing {

// Kind of the aprings::Error thrown by f, nullopt if nothing was thrown.
inline std::optional<aprings::ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const aprings::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::mt19937_64 seeded(std::uint64_t salt) { return std::mt19937_64(0x5eedf00dULL ^ salt); }

}  // namespace testing
