#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperorder/errors.hpp"

namespace hyperorder::detail {

// Walks the data lines of a text input: blank lines and lines whose first
// non-blank character is '#' are skipped. Accepts LF or CRLF.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
  };

  std::optional<Line> next() {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      auto raw = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      auto tokens = split(raw);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return Line{line_, std::move(tokens)};
    }
    return std::nullopt;
  }

  std::size_t line() const { return line_; }

 private:
  static std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      const auto start = i;
      while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
      if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

inline std::uint64_t parse_unsigned(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace hyperorder::detail
