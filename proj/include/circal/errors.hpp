#pragma once

#include <stdexcept>
#include <string>

namespace circal {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. line is 1-based, or 0 when unknown.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_ = 0;
};

// Violated operation precondition: bad index, inapplicable move, invalid
// decomposition handed to an operation that requires a valid one.
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace circal
