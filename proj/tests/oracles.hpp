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

// Brute-force reference implementations used only by tests. Each one
// follows a definition directly and shares no code with the library.

#ifndef PARRYSA_TESTS_ORACLES_HPP_
#define PARRYSA_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Digits = std::vector<std::uint32_t>;

// Parameter words satisfying the working hypothesis, k in [k_min, k_max].
inline std::vector<Digits> family(std::size_t k_min, std::size_t k_max,
                                  std::uint32_t digit_max) {
  std::vector<Digits> out;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= digit_max + 1;
    for (std::uint64_t code = 0; code < total; ++code) {
      Digits c(k);
      std::uint64_t x = code;
      for (std::size_t i = k; i-- > 0;) {
        c[i] = static_cast<std::uint32_t>(x % (digit_max + 1));
        x /= digit_max + 1;
      }
      if (c.front() >= 1 && c.back() >= 1) out.push_back(c);
    }
  }
  return out;
}

// mu_c written out from its definition.
inline Digits image(const Digits& c, std::uint32_t letter) {
  Digits out(c[letter], 0);
  if (letter + 1 < c.size()) out.push_back(letter + 1);
  return out;
}

inline Digits iterate(const Digits& c, std::size_t n) {
  Digits w{0};
  for (std::size_t step = 0; step < n; ++step) {
    Digits next;
    for (auto a : w) {
      const Digits img = image(c, a);
      next.insert(next.end(), img.begin(), img.end());
    }
    w = std::move(next);
  }
  return w;
}

inline Digits prefix(const Digits& c, std::size_t m) {
  Digits w{0};
  std::size_t n = 0;
  while (w.size() < m + 1 && n < 64) w = iterate(c, ++n);
  w.resize(m);
  return w;
}

// Every distinct factor has an occurrence containing some position
// (positions 1-based).
inline bool is_attractor(const Digits& w, const std::vector<std::uint64_t>& gamma) {
  const std::size_t n = w.size();
  std::set<Digits> seen;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = 1; i + len <= n; ++len) {
      Digits f(w.begin() + i, w.begin() + i + len);
      if (!seen.insert(f).second) continue;
      bool hit = false;
      for (std::size_t s = 0; s + len <= n && !hit; ++s) {
        if (!std::equal(f.begin(), f.end(), w.begin() + s)) continue;
        for (auto p : gamma) {
          if (p >= s + 1 && p <= s + len) {
            hit = true;
            break;
          }
        }
      }
      if (!hit) return false;
    }
  }
  return true;
}

// Size of a smallest attractor by subset enumeration; n must be small.
inline std::size_t min_attractor_size(const Digits& w) {
  const std::size_t n = w.size();
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<std::uint64_t> gamma;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) gamma.push_back(i + 1);
      }
      if (is_attractor(w, gamma)) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

// All rotations compared by brute force.
inline bool is_primitive(const Digits& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    Digits rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    if (rot == w) return false;
  }
  return true;
}

inline bool is_anti_lyndon(const Digits& w) {
  if (w.empty() || !is_primitive(w)) return false;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Digits rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    if (!(rot < w)) return false;
  }
  return true;
}

// Lyndon in the standard order: strictly smaller than all proper suffixes.
inline bool is_lyndon(const Digits& w) {
  if (w.empty()) return false;
  for (std::size_t s = 1; s < w.size(); ++s) {
    Digits suf(w.begin() + s, w.end());
    if (!(w < suf)) return false;
  }
  return true;
}

// Accepted by the automaton read off mu_c: from state q, digit d leads to
// the (d+1)-st letter of mu_c(q). Leading zeros rejected.
inline bool in_language(const Digits& c, const Digits& d) {
  if (!d.empty() && d.front() == 0) return false;
  std::uint32_t q = 0;
  for (auto digit : d) {
    const Digits img = image(c, q);
    if (digit >= img.size()) return false;
    q = img[digit];
  }
  return true;
}

// First `count` accepted words in genealogical order, by exhaustive
// generation of all digit words of each length.
inline std::vector<Digits> language(const Digits& c, std::size_t count) {
  const std::uint32_t top = *std::max_element(c.begin(), c.end());
  std::vector<Digits> out;
  for (std::size_t len = 0; out.size() < count; ++len) {
    Digits d(len, 0);
    for (;;) {
      if (in_language(c, d)) {
        out.push_back(d);
        if (out.size() == count) return out;
      }
      std::size_t i = len;
      while (i > 0 && d[i - 1] == top) d[--i] = 0;
      if (i == 0) break;
      ++d[i - 1];
    }
  }
  return out;
}

// Largest-term-first against the word lengths |u_n|.
inline Digits integer_greedy(const std::vector<std::uint64_t>& u, std::uint64_t n) {
  if (n == 0) return {};
  std::size_t top = 0;
  while (top + 1 < u.size() && u[top + 1] <= n) ++top;
  Digits out;
  for (std::size_t i = top + 1; i-- > 0;) {
    out.push_back(static_cast<std::uint32_t>(n / u[i]));
    n %= u[i];
  }
  return out;
}

// |u_n| from letter counts: mu_c(a) holds c_a zeros and one a+1 (if a < k-1).
inline std::vector<std::uint64_t> lengths(const Digits& c, std::size_t count) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> counts(c.size(), 0);
  counts[0] = 1;
  for (std::size_t n = 0; n < count; ++n) {
    std::uint64_t total = 0;
    for (auto x : counts) total += x;
    out.push_back(total);
    std::vector<std::uint64_t> next(c.size(), 0);
    for (std::size_t a = 0; a < c.size(); ++a) {
      next[0] += counts[a] * c[a];
      if (a + 1 < c.size()) next[a + 1] += counts[a];
    }
    counts = std::move(next);
  }
  return out;
}

}  // namespace oracle

#endif  // PARRYSA_TESTS_ORACLES_HPP_
