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

// The morphism mu_c : i -> 0^{c_i} (i+1) for i < k-1, k-1 -> 0^{c_{k-1}},
// its iterates u_n = mu_c^n(0), their lengths U_n and prefixes of the fixed
// point u.

#ifndef PARRYSA_WORDS_HPP_
#define PARRYSA_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "parrysa/types.hpp"

namespace parrysa {

/// Largest supported alphabet.
inline constexpr std::size_t kMaxAlphabet = 64;

/// Words longer than this are never materialized.
inline constexpr std::uint64_t kMaxMaterialized = std::uint64_t{1} << 30;

/// A validated parameter word c = c_0 ... c_{k-1}.
///
/// Invariants: 2 <= k <= kMaxAlphabet, c_0 >= 1 and c_{k-1} >= 1. Instances
/// are immutable once constructed.
class ParamWord {
 public:
  /// Throws Error(kInvalidArgument) naming the violated hypothesis.
  explicit ParamWord(std::vector<Letter> digits);

  std::size_t k() const noexcept { return digits_.size(); }
  Letter operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<Letter>& digits() const noexcept { return digits_; }

  /// c_0 ... c_{k-2} (c_{k-1} - 1), the period of d*.
  Word periodization() const;

  friend bool operator==(const ParamWord&, const ParamWord&) = default;

 private:
  std::vector<Letter> digits_;
};

ParamWord validate_params(std::vector<Letter> digits);

/// mu_c applied letterwise. Throws Error(kDomain) on a letter >= k.
Word apply_morphism(const ParamWord& c, std::span<const Letter> w);

/// u_n = mu_c^n(0).
Word word_un(const ParamWord& c, std::size_t n);

/// U_n from the linear recurrence, exact.
BigInt length_un(const ParamWord& c, std::size_t n);

/// U_0 .. U_{count-1}.
std::vector<BigInt> length_table(const ParamWord& c, std::size_t count);

/// First m letters of the fixed point u.
Word prefix(const ParamWord& c, std::uint64_t m);

}  // namespace parrysa

#endif  // PARRYSA_WORDS_HPP_
