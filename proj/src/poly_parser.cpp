#include <cctype>
#include <string>

#include "kzero/class_poly.hpp"
#include "kzero/errors.hpp"

namespace kzero {

namespace {

// expr    := ['+'|'-'] term (('+'|'-') term)*
// term    := factor (('*' | '/') factor)*
// factor  := '-' factor | primary ['^' integer]
// primary := integer | identifier | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  ClassPoly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    ClassPoly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error, "parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ClassPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    ClassPoly result = term();
    if (negate) result = -result;
    for (;;) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        return result;
      }
    }
  }

  ClassPoly term() {
    ClassPoly result = factor();
    for (;;) {
      if (accept('*')) {
        result *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        ClassPoly divisor = factor();
        auto value = divisor.constant_value();
        if (!value || *value == 0) {
          pos_ = at;
          fail("division is only defined by a non-zero constant");
        }
        Rational inv = 1 / *value;
        result *= inv;
      } else {
        return result;
      }
    }
  }

  ClassPoly factor() {
    if (accept('-')) return -factor();
    ClassPoly base = primary();
    if (accept('^')) {
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a non-negative integer");
      }
      std::string digits = read_digits();
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  ClassPoly primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ClassPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return ClassPoly::constant(Rational(Integer(read_digits())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return ClassPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassPoly parse_class_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace kzero
