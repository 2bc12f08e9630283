// Copyright 2026 The tac-orient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-oriented helpers shared by the text parsers.

#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tacorient/error.hpp"

namespace tacorient::text {

struct Line {
  int number = 0;  // 1-based
  std::string_view content;
};

/// Splits on '\n', strips a trailing '\r', and drops trailing blank lines.
inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view content = text.substr(pos, end - pos);
    if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
    lines.push_back({++number, content});
    if (end == text.size()) break;
    pos = end + 1;
  }
  while (!lines.empty() &&
         lines.back().content.find_first_not_of(" \t") ==
             std::string_view::npos) {
    lines.pop_back();
  }
  return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    pos = s.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = s.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

inline std::int64_t parse_int(std::string_view field, int line) {
  std::int64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "expected an integer, got '" + std::string(field) +
                               "'");
  }
  return value;
}

/// Parses a line holding exactly two integers.
inline std::pair<std::int64_t, std::int64_t> parse_pair(const Line& line) {
  auto fields = split_fields(line.content);
  if (fields.size() != 2) {
    throw ParseError(line.number, "expected two integers");
  }
  return {parse_int(fields[0], line.number), parse_int(fields[1], line.number)};
}

}  // namespace tacorient::text
