#pragma once

// Small line/token helpers shared by the text-format parsers.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ripskit/errors.hpp"

namespace ripskit::text_util {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Non-blank, non-comment lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(lineno, line);
  }
  return out;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline std::optional<std::string_view> strip_prefix(std::string_view s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
  return s.substr(prefix.size());
}

inline BigInt parse_bigint(std::string_view s) {
  std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k == s.size()) throw ParseError("expected an integer, got '" + std::string(s) + "'");
  for (std::size_t i = k; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected an integer, got '" + std::string(s) + "'");
  BigInt v(std::string(s.substr(k)));
  return s[0] == '-' ? BigInt(-v) : v;
}

inline std::size_t parse_size(std::string_view s) {
  BigInt v = parse_bigint(s);
  if (v < 0 || v > BigInt(std::numeric_limits<std::size_t>::max()))
    throw ParseError("expected a nonnegative integer, got '" + std::string(s) + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace ripskit::text_util
