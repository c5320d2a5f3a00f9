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

// Distinct factors grouped by occurrence set.
//
// Factors of w with the same set of starting positions form one node of the
// suffix tree: lengths (parent_depth, depth] over a suffix-array interval.
// For attractor purposes only the shortest length of each class matters,
// since a longer factor crosses every position the shorter one crosses.

#ifndef PARRYSA_SRC_FACTOR_CLASSES_HPP_
#define PARRYSA_SRC_FACTOR_CLASSES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "parrysa/types.hpp"

namespace parrysa::detail {

struct FactorClass {
  std::size_t lb;          // suffix array interval [lb, rb]
  std::size_t rb;
  std::size_t min_length;  // shortest factor length with this occurrence set
};

class FactorIndex {
 public:
  explicit FactorIndex(std::span<const Letter> w);

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::size_t>& suffix_array() const noexcept { return sa_; }
  const std::vector<FactorClass>& classes() const noexcept { return classes_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> sa_;
  std::vector<FactorClass> classes_;
};

/// Fixed-size bitset over word positions.
class PositionSet {
 public:
  PositionSet() = default;
  explicit PositionSet(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }
  void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { bits_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1U; }
  void set_range(std::size_t first, std::size_t last);  // inclusive

  std::size_t count() const;
  bool intersects(const PositionSet& other) const;
  bool subset_of(const PositionSet& other) const;
  PositionSet operator&(const PositionSet& other) const;
  std::vector<std::size_t> members() const;

  friend bool operator==(const PositionSet&, const PositionSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// For each factor class, the positions (0-based) crossed by at least one
/// occurrence of its shortest member. Duplicates and supersets are dropped:
/// hitting every remaining set is equivalent to being an attractor.
std::vector<PositionSet> attractor_constraints(std::span<const Letter> w);

/// Exact minimum hitting set of `constraints` over positions [0, n).
/// Returns the lexicographically least sorted position list among the
/// minimum ones. `lower_bound` must not exceed the optimum.
std::vector<std::size_t> minimum_hitting_set(
    const std::vector<PositionSet>& constraints, std::size_t n,
    std::size_t lower_bound);

}  // namespace parrysa::detail

#endif  // PARRYSA_SRC_FACTOR_CLASSES_HPP_
