#include "liecas/parse.hpp"

#include "liecas/error.hpp"
#include "liecas/matrix.hpp"

#include <algorithm>
#include <cctype>

namespace liecas {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_reserved_identifier(std::string_view s) {
  return s == kCharPolyVariable;
}

namespace {

class ExprParser {
public:
  ExprParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  RatFunc parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    RatFunc v = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

private:
  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = factor();
    for (;;) {
      skip_space();
      if (accept('*')) {
        v *= factor();
      } else if (peek() == '/') {
        std::size_t at = pos_;
        ++pos_;
        RatFunc d = factor();
        if (d.is_zero()) fail_at(at, "division by the zero polynomial");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFunc factor() {
    RatFunc b = base();
    skip_space();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) fail_at(start, "exponent too large");
      b = b.pow(std::stoi(digits));
    }
    return b;
  }

  RatFunc base() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      // Binds looser than "^": -p^2 is -(p^2).
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (is_reserved_identifier(name)) fail_at(start, "reserved identifier '" + name + "'");
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
        fail_at(start, "unknown identifier '" + name + "'");
      return RatFunc::variable(name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(msg, 0, at + 1);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_scalar(std::string_view text, const std::vector<std::string>& vars) {
  return ExprParser(text, vars).parse();
}

}  // namespace liecas
