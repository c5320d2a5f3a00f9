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

#include "parrysa/words.hpp"

#include <string>
#include <utility>

namespace parrysa {

ParamWord::ParamWord(std::vector<Letter> digits) : digits_(std::move(digits)) {
  if (digits_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "parameter word needs k >= 2 digits, got " +
                    std::to_string(digits_.size()));
  }
  if (digits_.size() > kMaxAlphabet) {
    throw Error(ErrorCode::kInvalidArgument,
                "parameter word longer than " + std::to_string(kMaxAlphabet) +
                    " digits is not supported");
  }
  if (digits_.front() == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "c_0 must be >= 1 (mu_c is not prolongable on 0 otherwise)");
  }
  if (digits_.back() == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "c_{k-1} must be >= 1 (mu_c would be erasing)");
  }
}

Word ParamWord::periodization() const {
  Word d(digits_.begin(), digits_.end());
  d.back() -= 1;
  return d;
}

ParamWord validate_params(std::vector<Letter> digits) {
  return ParamWord(std::move(digits));
}

namespace {

std::uint64_t image_length(const ParamWord& c, std::span<const Letter> w) {
  std::uint64_t total = 0;
  for (Letter a : w) {
    if (a >= c.k()) {
      throw Error(ErrorCode::kDomain, "letter " + std::to_string(a) +
                                          " outside alphabet of size " +
                                          std::to_string(c.k()));
    }
    total += c[a] + (a + 1 < c.k() ? 1 : 0);
  }
  return total;
}

}  // namespace

Word apply_morphism(const ParamWord& c, std::span<const Letter> w) {
  const std::uint64_t len = image_length(c, w);
  if (len > kMaxMaterialized) {
    throw Error(ErrorCode::kCapReached, "morphic image too long to materialize");
  }
  Word out;
  out.reserve(static_cast<std::size_t>(len));
  for (Letter a : w) {
    out.insert(out.end(), c[a], Letter{0});
    if (a + 1 < c.k()) out.push_back(a + 1);
  }
  return out;
}

Word word_un(const ParamWord& c, std::size_t n) {
  Word w{0};
  for (std::size_t i = 0; i < n; ++i) w = apply_morphism(c, w);
  return w;
}

std::vector<BigInt> length_table(const ParamWord& c, std::size_t count) {
  const std::size_t k = c.k();
  std::vector<BigInt> u;
  u.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    BigInt v = n < k ? BigInt(1) : BigInt(0);
    const std::size_t terms = n < k ? n : k;
    for (std::size_t i = 0; i < terms; ++i) v += c[i] * u[n - i - 1];
    u.push_back(std::move(v));
  }
  return u;
}

BigInt length_un(const ParamWord& c, std::size_t n) {
  return length_table(c, n + 1).back();
}

Word prefix(const ParamWord& c, std::uint64_t m) {
  if (m > kMaxMaterialized) {
    throw Error(ErrorCode::kCapReached,
                "prefix length " + std::to_string(m) + " too long to materialize");
  }
  // mu_c maps prefixes of u to longer prefixes of u (c_0 >= 1), so images
  // are only expanded until they reach m letters.
  Word w{0};
  while (w.size() < m) {
    Word next;
    next.reserve(static_cast<std::size_t>(m) + c[0] + 1);
    for (Letter a : w) {
      next.insert(next.end(), c[a], Letter{0});
      if (a + 1 < c.k()) next.push_back(a + 1);
      if (next.size() >= m) break;
    }
    w = std::move(next);
  }
  w.resize(static_cast<std::size_t>(m));
  return w;
}

}  // namespace parrysa
