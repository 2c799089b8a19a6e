#include "hyperorder/text_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hyperorder/detail/line_reader.hpp"
#include "hyperorder/errors.hpp"

namespace hyperorder {

using detail::LineReader;
using detail::parse_unsigned;

SetFamily parse_family(std::string_view text) {
  LineReader reader(text);
  auto header = reader.next();
  if (!header) throw ParseError(0, "missing 'family <n> <m> <c>' header");
  const auto& h = header->tokens;
  if (h.size() != 4 || h[0] != "family") {
    throw ParseError(header->number, "expected 'family <n> <m> <c>'");
  }
  const auto n = parse_unsigned(h[1], header->number, "n");
  const auto m = parse_unsigned(h[2], header->number, "m");
  const auto c = parse_unsigned(h[3], header->number, "c");
  if (n == 0 || n > kMaxGroundSet) throw ParseError(header->number, "n out of range");
  if (c == 0) throw ParseError(header->number, "c must be positive");

  std::vector<MemberSet> sets;
  sets.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto line = reader.next();
    if (!line) {
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " member-sets, found " +
                                          std::to_string(i));
    }
    if (line->tokens.size() > c) throw ParseError(line->number, "member-set has more than c elements");
    MemberSet s;
    for (auto tok : line->tokens) {
      const auto x = parse_unsigned(tok, line->number, "element");
      if (x < 1 || x > n) throw ParseError(line->number, "element " + std::string(tok) + " outside [1, n]");
      s.push_back(static_cast<Element>(x));
    }
    auto sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(line->number, "member-set repeats an element");
    }
    sets.push_back(std::move(s));
  }
  if (auto extra = reader.next()) {
    throw ParseError(extra->number, "more data lines than the declared m");
  }
  return SetFamily(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(c), std::move(sets));
}

std::string format_family(const SetFamily& family) {
  std::ostringstream out;
  out << "family " << family.n() << ' ' << family.m() << ' ' << family.c() << '\n';
  for (const auto& s : family.sets()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

Ordering parse_ordering(std::string_view text, std::size_t m) {
  LineReader reader(text);
  std::vector<std::size_t> perm;
  auto line = reader.next();
  if (line) {
    for (auto tok : line->tokens) {
      const auto v = parse_unsigned(tok, line->number, "ordering entry");
      if (v < 1 || v > m) throw ParseError(line->number, "ordering entry " + std::string(tok) + " outside [1, m]");
      perm.push_back(static_cast<std::size_t>(v - 1));
    }
    if (auto extra = reader.next()) throw ParseError(extra->number, "ordering must be a single data line");
  }
  if (perm.size() != m) {
    throw ParseError(line ? line->number : 0, "ordering has " + std::to_string(perm.size()) +
                                                  " entries, expected " + std::to_string(m));
  }
  try {
    return Ordering(std::move(perm));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line ? line->number : 0, e.what());
  }
}

std::string format_ordering(const Ordering& order) {
  std::ostringstream out;
  for (std::size_t k = 0; k < order.size(); ++k) out << (k ? " " : "") << order[k] + 1;
  out << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hyperorder
