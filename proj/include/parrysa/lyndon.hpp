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

// Orders on integer alphabets, Lyndon / anti-Lyndon predicates and Duval's
// factorization.
//
// An anti-Lyndon word is a Lyndon word for the inverse letter order, i.e. a
// primitive word that is strictly greater than all its other conjugates.

#ifndef PARRYSA_LYNDON_HPP_
#define PARRYSA_LYNDON_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "parrysa/types.hpp"
#include "parrysa/words.hpp"

namespace parrysa {

enum class Order { kStandard, kInverse };

/// Letter comparison under `ord`.
std::strong_ordering compare_letters(Letter a, Letter b, Order ord);

/// Lexicographic order; a proper prefix compares smaller.
std::strong_ordering lex_compare(std::span<const Letter> x,
                                 std::span<const Letter> y,
                                 Order ord = Order::kStandard);

/// Genealogical (radix) order: shorter first, then lexicographic.
std::strong_ordering gen_compare(std::span<const Letter> x,
                                 std::span<const Letter> y,
                                 Order ord = Order::kStandard);

/// Length of the shortest period of a non-empty word.
std::size_t smallest_period(std::span<const Letter> w);

/// True iff w is not u^n for some n >= 2. Throws Error(kDomain) on empty w.
bool is_primitive(std::span<const Letter> w);

/// True iff w >= every rotation of w (standard order, non-strict).
bool is_max_conjugate(std::span<const Letter> w);

/// Lyndon for `ord`: primitive and strictly below its other conjugates.
bool is_lyndon(std::span<const Letter> w, Order ord);

bool is_anti_lyndon(std::span<const Letter> w);

/// True iff w has no border other than the empty word and w itself.
bool is_unbordered(std::span<const Letter> w);

/// Chen-Fox-Lyndon factorization computed by Duval's algorithm.
struct LyndonFactorization {
  std::vector<Word> factors;
};

LyndonFactorization duval_factorization(std::span<const Letter> w, Order ord);

/// First Duval factor for the inverse order.
Word longest_anti_lyndon_prefix(std::span<const Letter> w);

/// The first `length` letters of a = w^omega, where w is the longest
/// anti-Lyndon prefix of c_0 ... c_{k-2}.
Word anti_lyndon_stream(const ParamWord& c, std::size_t length);

}  // namespace parrysa

#endif  // PARRYSA_LYNDON_HPP_
