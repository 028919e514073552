#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpd {

/// Malformed user input: quiver files, family parameters, oracle settings.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a quiver file, tagged with the offending 1-based line.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : ValidationError("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fpd
