#pragma once

#include <string>

#include "aprings/ring_model.hpp"

namespace aprings {

// Integer combinations of the model's named elements with + - * ^ and
// parentheses, e.g. "2*g0 - 3*g1 + 1" or "(1+g)^3". Throws Error(Parse).
RingElement parse_element(const RingModel& ring, const std::string& text);

// Inverse direction for display: "2 - 3*g".
std::string format_element(const RingModel& ring, const RingElement& e);

}  // namespace aprings
