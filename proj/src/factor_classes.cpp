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

#include "factor_classes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace parrysa::detail {

namespace {

std::vector<std::size_t> build_suffix_array(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> sa(n);
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  std::vector<std::uint64_t> rank(w.begin(), w.end());
  std::vector<std::uint64_t> next(n);
  for (std::size_t len = 1; n > 1; len <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair(rank[i], i + len < n ? rank[i + len] + 1 : 0);
    };
    std::sort(sa.begin(), sa.end(),
              [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    next[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      next[sa[i]] = next[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    }
    rank.swap(next);
    if (rank[sa[n - 1]] == n - 1 || len >= n) break;
  }
  return sa;
}

// lcp[i] = LCP(suffix sa[i-1], suffix sa[i]); lcp[0] = 0.
std::vector<std::size_t> build_lcp(std::span<const Letter> w,
                                   const std::vector<std::size_t>& sa) {
  const std::size_t n = w.size();
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;
  std::vector<std::size_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace

FactorIndex::FactorIndex(std::span<const Letter> w) : n_(w.size()) {
  if (n_ == 0) return;
  sa_ = build_suffix_array(w);
  const auto lcp = build_lcp(w, sa_);

  // Leaves: lengths occurring only at sa[i].
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t low = i > 0 ? lcp[i] : 0;
    if (i + 1 < n_) low = std::max(low, lcp[i + 1]);
    if (low < n_ - sa_[i]) classes_.push_back({i, i, low + 1});
  }

  // Internal nodes, bottom-up over lcp-intervals.
  struct Open {
    std::size_t depth;
    std::size_t lb;
  };
  std::vector<Open> stack{{0, 0}};
  for (std::size_t i = 1; i <= n_; ++i) {
    const std::size_t x = i < n_ ? lcp[i] : 0;
    std::size_t lb = i - 1;
    while (x < stack.back().depth) {
      const Open node = stack.back();
      stack.pop_back();
      const std::size_t parent = std::max(x, stack.back().depth);
      classes_.push_back({node.lb, i - 1, parent + 1});
      lb = node.lb;
    }
    if (x > stack.back().depth) stack.push_back({x, lb});
  }
}

void PositionSet::set_range(std::size_t first, std::size_t last) {
  for (std::size_t i = first; i <= last; ++i) set(i);
}

std::size_t PositionSet::count() const {
  std::size_t total = 0;
  for (auto b : bits_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

bool PositionSet::intersects(const PositionSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & other.bits_[i]) return true;
  }
  return false;
}

bool PositionSet::subset_of(const PositionSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

PositionSet PositionSet::operator&(const PositionSet& other) const {
  PositionSet out(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] & other.bits_[i];
  return out;
}

std::vector<std::size_t> PositionSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t word = 0; word < bits_.size(); ++word) {
    std::uint64_t b = bits_[word];
    while (b != 0) {
      out.push_back(word * 64 + static_cast<std::size_t>(std::countr_zero(b)));
      b &= b - 1;
    }
  }
  return out;
}

std::vector<PositionSet> attractor_constraints(std::span<const Letter> w) {
  const FactorIndex index(w);
  const std::size_t n = w.size();
  const auto& sa = index.suffix_array();

  std::vector<PositionSet> sets;
  sets.reserve(index.classes().size());
  std::vector<std::size_t> starts;
  for (const auto& cls : index.classes()) {
    starts.assign(sa.begin() + cls.lb, sa.begin() + cls.rb + 1);
    std::sort(starts.begin(), starts.end());
    PositionSet s(n);
    std::size_t covered_to = 0;  // first position not yet set
    for (std::size_t st : starts) {
      const std::size_t first = std::max(st, covered_to);
      const std::size_t last = st + cls.min_length - 1;
      if (first <= last) s.set_range(first, last);
      covered_to = std::max(covered_to, last + 1);
    }
    sets.push_back(std::move(s));
  }

  // Keep inclusion-minimal sets only.
  std::sort(sets.begin(), sets.end(), [](const PositionSet& a, const PositionSet& b) {
    return a.count() < b.count();
  });
  std::vector<PositionSet> kept;
  for (auto& s : sets) {
    bool implied = false;
    for (const auto& k : kept) {
      if (k.subset_of(s)) {
        implied = true;
        break;
      }
    }
    if (!implied) kept.push_back(std::move(s));
  }
  return kept;
}

namespace {

class HittingSetSearch {
 public:
  HittingSetSearch(const std::vector<PositionSet>& constraints, std::size_t n)
      : constraints_(constraints), n_(n) {}

  // True iff the open constraints can be hit with at most `budget`
  // positions drawn from `allowed`. Appends the positions to `chosen`.
  bool solve(const std::vector<std::size_t>& open, std::size_t budget,
             PositionSet allowed, std::vector<std::size_t>& chosen) const {
    if (open.empty()) return true;
    if (budget == 0) return false;

    std::vector<std::pair<std::size_t, std::size_t>> sized;  // (count, id)
    sized.reserve(open.size());
    for (std::size_t id : open) {
      const std::size_t cnt = (constraints_[id] & allowed).count();
      if (cnt == 0) return false;
      sized.emplace_back(cnt, id);
    }
    std::sort(sized.begin(), sized.end());

    // Pairwise disjoint constraints need distinct positions.
    PositionSet used(n_);
    std::size_t packing = 0;
    for (const auto& [cnt, id] : sized) {
      const PositionSet r = constraints_[id] & allowed;
      if (!r.intersects(used)) {
        ++packing;
        if (packing > budget) return false;
        for (std::size_t p : r.members()) used.set(p);
      }
    }

    const std::size_t pivot = sized.front().second;
    for (std::size_t p : (constraints_[pivot] & allowed).members()) {
      std::vector<std::size_t> rest;
      rest.reserve(open.size());
      for (std::size_t id : open) {
        if (!constraints_[id].test(p)) rest.push_back(id);
      }
      chosen.push_back(p);
      if (solve(rest, budget - 1, allowed, chosen)) return true;
      chosen.pop_back();
      // Covers containing p have all been explored.
      allowed.reset(p);
    }
    return false;
  }

 private:
  const std::vector<PositionSet>& constraints_;
  std::size_t n_;
};

}  // namespace

std::vector<std::size_t> minimum_hitting_set(
    const std::vector<PositionSet>& constraints, std::size_t n,
    std::size_t lower_bound) {
  const HittingSetSearch search(constraints, n);
  std::vector<std::size_t> all(constraints.size());
  std::iota(all.begin(), all.end(), std::size_t{0});

  // Candidate reduction: drop positions whose constraint set is contained
  // in another position's (ties keep the smallest position).
  std::vector<PositionSet> coverage(n, PositionSet(constraints.size()));
  for (std::size_t id = 0; id < constraints.size(); ++id) {
    for (std::size_t p : constraints[id].members()) coverage[p].set(id);
  }
  PositionSet candidates(n);
  for (std::size_t p = 0; p < n; ++p) {
    bool dominated = false;
    for (std::size_t q = 0; q < n && !dominated; ++q) {
      if (q == p || !coverage[p].subset_of(coverage[q])) continue;
      dominated = !(coverage[q] == coverage[p]) || q < p;
    }
    if (!dominated) candidates.set(p);
  }

  std::size_t size = std::max<std::size_t>(lower_bound, all.empty() ? 0 : 1);
  for (;; ++size) {
    std::vector<std::size_t> scratch;
    if (search.solve(all, size, candidates, scratch)) break;
  }

  // Lexicographically least cover of that size, fixed slot by slot.
  std::vector<std::size_t> result;
  std::vector<std::size_t> open = all;
  std::size_t from = 0;
  while (!open.empty()) {
    const std::size_t remaining = size - result.size();
    bool placed = false;
    for (std::size_t p = from; p < n && !placed; ++p) {
      std::vector<std::size_t> rest;
      for (std::size_t id : open) {
        if (!constraints[id].test(p)) rest.push_back(id);
      }
      PositionSet later(n);
      for (std::size_t q = p + 1; q < n; ++q) later.set(q);
      std::vector<std::size_t> scratch;
      if (search.solve(rest, remaining - 1, later, scratch)) {
        result.push_back(p);
        open = std::move(rest);
        from = p + 1;
        placed = true;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::kInternal, "minimum_hitting_set: no lexicographic completion");
    }
  }
  return result;
}

}  // namespace parrysa::detail
