#pragma once

#include <stdexcept>
#include <string>

namespace ptrace {

/// Malformed or mathematically inadmissible input (exit code 2 at the CLI).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial or scalar expression failed to parse; `token()` names the culprit.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, std::string token)
      : ValidationError(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Configured step budget ran out before the computation finished (exit code 3).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptrace
