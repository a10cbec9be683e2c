#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszul {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }

  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a mathematical precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A computation hit its step or length budget. Partial state is discarded.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace koszul
