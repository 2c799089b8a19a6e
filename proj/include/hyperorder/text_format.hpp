#pragma once

#include <string>
#include <string_view>

#include "hyperorder/family.hpp"

namespace hyperorder {

// Family text format:
//   family <n> <m> <c>
//   <m lines, each 1..c distinct ids in [1, n]>
// '#' comment lines and blank lines are ignored. Throws ParseError.
SetFamily parse_family(std::string_view text);
std::string format_family(const SetFamily& family);

// Ordering text format: one data line holding a permutation of 1..m.
Ordering parse_ordering(std::string_view text, std::size_t m);
std::string format_ordering(const Ordering& order);

// Whole-file helpers; throw std::runtime_error when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace hyperorder
