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

// Text forms of digit words, parameter words and position sets.
//
// Digit words print juxtaposed ("102") when every digit is at most 9 and
// dot-separated ("1.10.2") otherwise. The empty word prints as "ε".

#ifndef PARRYSA_FORMAT_HPP_
#define PARRYSA_FORMAT_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parrysa/types.hpp"
#include "parrysa/words.hpp"

namespace parrysa {

inline constexpr std::string_view kEmptyWordText = "ε";

std::string format_digits(std::span<const Letter> digits);

/// Accepts both juxtaposed and dot-separated forms, and "ε" or "" for the
/// empty word. Errors name the offending character position.
Word parse_digits(std::string_view text);

/// parse_digits followed by ParamWord validation.
ParamWord parse_params(std::string_view text);

/// Non-negative decimal integer of any size.
BigInt parse_natural(std::string_view text);

/// "{3,9}"
std::string format_positions(std::span<const std::uint64_t> positions);

}  // namespace parrysa

#endif  // PARRYSA_FORMAT_HPP_
