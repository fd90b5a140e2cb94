#pragma once

// Line/token helpers shared by the instance and fixture parsers.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beamkit::text {

struct Line {
  int number;
  std::string_view content;  // comment stripped, whitespace-trimmed
};

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// Non-empty lines with `#` comments removed.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.push_back({number, raw});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

inline std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

inline std::optional<double> to_real(std::string_view token) {
  double value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

}  // namespace beamkit::text
