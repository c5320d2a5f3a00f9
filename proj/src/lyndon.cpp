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

#include "parrysa/lyndon.hpp"

#include <algorithm>

namespace parrysa {

namespace {

void require_non_empty(std::span<const Letter> w, const char* what) {
  if (w.empty()) {
    throw Error(ErrorCode::kDomain, std::string(what) + ": empty word");
  }
}

// Compares the rotation of w starting at r with w itself.
std::strong_ordering compare_rotation(std::span<const Letter> w, std::size_t r,
                                      Order ord) {
  const std::size_t n = w.size();
  for (std::size_t t = 0; t < n; ++t) {
    auto cmp = compare_letters(w[(r + t) % n], w[t], ord);
    if (cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

// KMP failure function; border[i] is the longest proper border of w[0, i).
std::vector<std::size_t> border_table(std::span<const Letter> w) {
  std::vector<std::size_t> border(w.size() + 1, 0);
  std::size_t b = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (b > 0 && w[i] != w[b]) b = border[b];
    if (w[i] == w[b]) ++b;
    border[i + 1] = b;
  }
  return border;
}

}  // namespace

std::strong_ordering compare_letters(Letter a, Letter b, Order ord) {
  return ord == Order::kStandard ? a <=> b : b <=> a;
}

std::strong_ordering lex_compare(std::span<const Letter> x,
                                 std::span<const Letter> y, Order ord) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto cmp = compare_letters(x[i], y[i], ord);
    if (cmp != 0) return cmp;
  }
  return x.size() <=> y.size();
}

std::strong_ordering gen_compare(std::span<const Letter> x,
                                 std::span<const Letter> y, Order ord) {
  if (x.size() != y.size()) return x.size() <=> y.size();
  return lex_compare(x, y, ord);
}

std::size_t smallest_period(std::span<const Letter> w) {
  require_non_empty(w, "smallest_period");
  return w.size() - border_table(w).back();
}

bool is_primitive(std::span<const Letter> w) {
  require_non_empty(w, "is_primitive");
  const std::size_t p = smallest_period(w);
  return p == w.size() || w.size() % p != 0;
}

bool is_max_conjugate(std::span<const Letter> w) {
  require_non_empty(w, "is_max_conjugate");
  for (std::size_t r = 1; r < w.size(); ++r) {
    if (compare_rotation(w, r, Order::kStandard) > 0) return false;
  }
  return true;
}

bool is_lyndon(std::span<const Letter> w, Order ord) {
  require_non_empty(w, "is_lyndon");
  for (std::size_t r = 1; r < w.size(); ++r) {
    if (compare_rotation(w, r, ord) <= 0) return false;
  }
  return true;
}

bool is_anti_lyndon(std::span<const Letter> w) {
  require_non_empty(w, "is_anti_lyndon");
  return is_primitive(w) && is_max_conjugate(w);
}

bool is_unbordered(std::span<const Letter> w) {
  require_non_empty(w, "is_unbordered");
  return border_table(w).back() == 0;
}

LyndonFactorization duval_factorization(std::span<const Letter> w, Order ord) {
  require_non_empty(w, "duval_factorization");
  LyndonFactorization out;
  const std::size_t n = w.size();
  std::size_t start = 0;
  while (start < n) {
    // w[start, j) is a fractional power of the Lyndon word of length j - i.
    // Position n plays the role of a letter smaller than every letter.
    std::size_t i = start;
    std::size_t j = start + 1;
    while (j < n) {
      auto cmp = compare_letters(w[i], w[j], ord);
      if (cmp < 0) {
        i = start;
      } else if (cmp == 0) {
        ++i;
      } else {
        break;
      }
      ++j;
    }
    const std::size_t period = j - i;
    while (start <= i) {
      out.factors.emplace_back(w.begin() + start, w.begin() + start + period);
      start += period;
    }
  }
  return out;
}

Word longest_anti_lyndon_prefix(std::span<const Letter> w) {
  require_non_empty(w, "longest_anti_lyndon_prefix");
  return duval_factorization(w, Order::kInverse).factors.front();
}

Word anti_lyndon_stream(const ParamWord& c, std::size_t length) {
  const auto& d = c.digits();
  const Word root =
      longest_anti_lyndon_prefix(std::span<const Letter>(d).first(c.k() - 1));
  Word a(length);
  for (std::size_t i = 0; i < length; ++i) a[i] = root[i % root.size()];
  return a;
}

}  // namespace parrysa
