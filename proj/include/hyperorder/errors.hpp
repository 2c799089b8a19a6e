#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperorder {

// Malformed text input. line() is 1-based; 0 means "no specific line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A resource guard (subset-DP size, memory, time, brute-force space) refused the request.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperorder
