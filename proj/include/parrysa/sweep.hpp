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

// Batch evaluation over families of parameter words.

#ifndef PARRYSA_SWEEP_HPP_
#define PARRYSA_SWEEP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parrysa/attractors.hpp"
#include "parrysa/report.hpp"
#include "parrysa/words.hpp"

namespace parrysa {

struct SweepSpec {
  std::size_t k_min = 2;
  std::size_t k_max = 3;
  Letter digit_max = 2;
  bool only_greedy = false;
  bool only_minimal_family = false;
  std::uint64_t m_max = 40;
  std::size_t jobs = 1;
  std::size_t exact_cap = kDefaultExactCap;
};

struct SweepRow {
  ParamWord c;
  ConditionReport conditions;
  std::optional<bool> minimal_family;  // empty when conditions fail
  std::optional<bool> conjecture;      // empty when conditions fail
  std::optional<std::uint64_t> first_disagreement;
};

/// All parameter words with k in [k_min, k_max], digits <= digit_max,
/// c_0 >= 1 and c_{k-1} >= 1, ordered by k then lexicographically.
std::vector<ParamWord> enumerate_params(std::size_t k_min, std::size_t k_max,
                                        Letter digit_max);

/// Rows in enumeration order regardless of `jobs`.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Header: schema,c,k,greedy,frac_power,dstar_le_a,max_conjugate,
/// minimal_family,conjecture. Booleans are 0/1; "na" when not applicable.
std::string sweep_csv(const std::vector<SweepRow>& rows);

Json sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace parrysa

#endif  // PARRYSA_SWEEP_HPP_
