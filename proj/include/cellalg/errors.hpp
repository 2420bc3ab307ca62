#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cellalg {

// Operands live in different ambient rings.
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Division by zero in the coefficient field.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Gröbner computation exceeded its pair/basis budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check between two independent routes failed.  Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Text could not be parsed.  Positions are 1-based; line is 0 when the
// input was a single expression rather than a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)),
        message_(what),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cellalg
