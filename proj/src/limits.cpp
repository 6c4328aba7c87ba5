#include "aprings/limits.hpp"

#include <cstdlib>
#include <string>

namespace aprings {
namespace {

void override_from_env(const char* name, std::size_t& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    field = static_cast<std::size_t>(std::stoull(raw));
  } catch (const std::exception&) {
    // malformed values keep the default
  }
}

Limits make_default_limits() {
  Limits limits;
  override_from_env("APRINGS_MAX_GROUP_ORDER", limits.max_group_order);
  override_from_env("APRINGS_MAX_CARRIER", limits.max_carrier);
  override_from_env("APRINGS_MAX_SUMSET", limits.max_sumset_size);
  return limits;
}

}  // namespace

const Limits& default_limits() {
  static const Limits limits = make_default_limits();
  return limits;
}

}  // namespace aprings
