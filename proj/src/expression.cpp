#include "aprings/expression.hpp"

#include <cctype>

#include "aprings/error.hpp"

namespace aprings {
namespace {

class Parser {
 public:
  Parser(const RingModel& ring, const std::string& text)
      : ring_(ring), text_(text), names_(ring.named_elements()) {}

  RingElement parse() {
    auto value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RingElement expression() {
    auto value = term();
    while (true) {
      if (accept('+')) {
        value = ring_.add(value, term());
      } else if (accept('-')) {
        value = ring_.sub(value, term());
      } else {
        return value;
      }
    }
  }

  RingElement term() {
    auto value = unary();
    while (accept('*')) value = ring_.mul(value, unary());
    return value;
  }

  RingElement unary() {
    if (accept('-')) return ring_.neg(unary());
    if (accept('+')) return unary();
    auto base = atom();
    if (accept('^')) {
      skip_space();
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      const auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 6) fail("exponent too large");
      return ring_.power(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  RingElement atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto value = expression();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ring_.from_integer(parse_integer(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '.')) {
        ++pos_;
      }
      const auto name = text_.substr(start, pos_ - start);
      auto it = names_.find(name);
      if (it == names_.end()) {
        std::string known;
        for (const auto& [n, v] : names_) known += (known.empty() ? "" : ", ") + n;
        pos_ = start;
        fail("unknown name '" + name + "' (known: " + (known.empty() ? "none" : known) + ")");
      }
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingModel& ring_;
  std::string text_;
  std::map<std::string, RingElement> names_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_element(const RingModel& ring, const std::string& text) { return Parser(ring, text).parse(); }

std::string format_element(const RingModel& ring, const RingElement& e) {
  ring.check_element(e);
  if (ring.kind() == ModelKind::Z) return to_decimal(e.coords[0]);
  const auto labels = ring.basis_labels();
  std::string out;
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    const auto& c = e.coords[i];
    if (c == 0) continue;
    const bool unit = labels[i] == "1";
    Integer mag = abs(c);
    std::string piece = unit ? to_decimal(mag) : (mag == 1 ? labels[i] : to_decimal(mag) + "*" + labels[i]);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + piece;
    } else {
      out += (c < 0 ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace aprings
