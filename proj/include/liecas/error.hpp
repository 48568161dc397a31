#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liecas {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; `line`/`column` are 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(format(msg, line, column)), message_(msg), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
    if (line == 0) return column == 0 ? msg : "col " + std::to_string(column) + ": " + msg;
    return "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + msg;
  }
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// A mathematical precondition failed (singular map, odd dimension, ...).
class MathError : public Error {
public:
  using Error::Error;
};

// A structural check failed (Jacobi, associator, cocycle law).
class ValidationError : public Error {
public:
  using Error::Error;
};

}  // namespace liecas
