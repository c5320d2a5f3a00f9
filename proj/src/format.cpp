// Copyright 2026 The parrysa Authors.
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

#include "parrysa/format.hpp"

#include <algorithm>
#include <charconv>

namespace parrysa {

namespace {

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

[[noreturn]] void bad_char(std::string_view text, std::size_t pos) {
  throw Error(ErrorCode::kInvalidArgument,
              "unexpected character '" + std::string(1, text[pos]) +
                  "' at position " + std::to_string(pos + 1) + " in \"" +
                  std::string(text) + "\"");
}

}  // namespace

std::string format_digits(std::span<const Letter> digits) {
  if (digits.empty()) return std::string(kEmptyWordText);
  const bool small = std::all_of(digits.begin(), digits.end(),
                                 [](Letter d) { return d <= 9; });
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!small && i > 0) out += '.';
    out += std::to_string(digits[i]);
  }
  return out;
}

Word parse_digits(std::string_view text) {
  if (text.empty() || text == kEmptyWordText) return {};
  Word out;
  if (text.find('.') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!is_digit(text[i])) bad_char(text, i);
      out.push_back(static_cast<Letter>(text[i] - '0'));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('.', start);
    if (end == std::string_view::npos) end = text.size();
    if (end == start) {
      throw Error(ErrorCode::kInvalidArgument,
                  "empty digit at position " + std::to_string(start + 1) +
                      " in \"" + std::string(text) + "\"");
    }
    for (std::size_t i = start; i < end; ++i) {
      if (!is_digit(text[i])) bad_char(text, i);
    }
    Letter value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end) {
      throw Error(ErrorCode::kInvalidArgument,
                  "digit too large at position " + std::to_string(start + 1) +
                      " in \"" + std::string(text) + "\"");
    }
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

ParamWord parse_params(std::string_view text) {
  return ParamWord(parse_digits(text));
}

BigInt parse_natural(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "expected a non-negative integer");
  }
  BigInt value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_digit(text[i])) bad_char(text, i);
    value = value * 10 + (text[i] - '0');
  }
  return value;
}

std::string format_positions(std::span<const std::uint64_t> positions) {
  std::string out = "{";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(positions[i]);
  }
  return out + "}";
}

}  // namespace parrysa
