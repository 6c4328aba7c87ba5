#include "aprings/integer.hpp"

#include <cctype>
#include <functional>

#include "aprings/error.hpp"

namespace aprings {

Integer parse_integer(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw Error(ErrorKind::Parse, "not an integer: '" + text + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(c)) throw Error(ErrorKind::Parse, "not an integer: '" + text + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Integer mod_floor(const Integer& value, const Integer& modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::size_t hash_integer(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max()) {
    return std::hash<long long>{}(value.convert_to<long long>());
  }
  return std::hash<std::string>{}(value.str());
}

}  // namespace aprings
