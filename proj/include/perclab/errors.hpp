#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perclab {

// Input violates a documented precondition (bad vertex, infeasible generator parameters, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured computational cap was hit (canonicalization size, subset
// enumeration, rejection sampling retries, eigen iterations).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text could not be parsed. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace perclab
