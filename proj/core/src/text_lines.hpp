#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcs/errors.hpp"

namespace mcs::detail {

struct Line {
  std::size_t number;  // 1-based
  std::vector<std::string_view> tokens;
};

// Whitespace-separated tokens per line; views point into `text`.
inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t eol = text.find('\n');
    std::string_view row = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < row.size()) {
      while (pos < row.size() && (row[pos] == ' ' || row[pos] == '\t' || row[pos] == '\r')) ++pos;
      std::size_t start = pos;
      while (pos < row.size() && row[pos] != ' ' && row[pos] != '\t' && row[pos] != '\r') ++pos;
      if (pos > start) line.tokens.push_back(row.substr(start, pos - start));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

template <typename T>
std::optional<T> to_number(std::string_view token) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

inline std::optional<std::uint64_t> to_uint(std::string_view token) {
  return to_number<std::uint64_t>(token);
}

inline std::uint64_t expect_uint(std::string_view token, std::size_t line, ParseErrorKind kind,
                                 const char* what) {
  auto value = to_uint(token);
  if (!value) {
    throw ParseError(kind, line,
                     std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return *value;
}

inline std::int64_t expect_int(std::string_view token, std::size_t line, ParseErrorKind kind,
                               const char* what) {
  auto value = to_number<std::int64_t>(token);
  if (!value) {
    throw ParseError(kind, line,
                     std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return *value;
}

}  // namespace mcs::detail
