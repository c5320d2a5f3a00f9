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

// String attractors of prefixes of u.
//
// Positions in an attractor are 1-based (position p is letter w[p-1]);
// letters of words are indexed from 0.

#ifndef PARRYSA_ATTRACTORS_HPP_
#define PARRYSA_ATTRACTORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parrysa/types.hpp"
#include "parrysa/words.hpp"

namespace parrysa {

using Position = std::uint64_t;

struct Attractor {
  std::vector<Position> positions;  // sorted, 1-based
  std::uint64_t word_len = 0;

  std::size_t size() const noexcept { return positions.size(); }
  friend bool operator==(const Attractor&, const Attractor&) = default;
};

/// Sorts and deduplicates; throws Error(kDomain) for positions outside
/// [1, word_len].
Attractor make_attractor(std::vector<Position> positions, std::uint64_t word_len);

/// Every distinct non-empty factor of w has an occurrence crossing a
/// position of gamma.
bool is_attractor(std::span<const Letter> w, const Attractor& gamma);

/// Gamma_n: {U_0..U_n} for n <= k-1, {U_{n-k+1}..U_n} beyond; empty for
/// n = -1.
std::vector<Position> gamma_n(const ParamWord& c, std::int64_t n);

/// Same set as exact integers.
std::vector<BigInt> gamma_n_exact(const ParamWord& c, std::int64_t n);

/// P_n: U_n for n <= k-1, U_n + U_{n-k+1} - U_{n-k} - 1 beyond.
BigInt p_n(const ParamWord& c, std::size_t n);

/// Q_n = sum_i a_i U_{n-i}.
BigInt q_n_formula(const ParamWord& c, std::size_t n);

/// Length of the longest common prefix of u and u_n^omega, by direct letter
/// comparison. Throws Error(kCapReached) if the match reaches `cap`
/// letters; cap 0 selects the default 4 U_{n+1}.
BigInt q_n_direct(const ParamWord& c, std::size_t n, std::uint64_t cap = 0);

enum class Comparison { kNone, kGreater, kEqual, kLess, kForced };

/// One step of the (ell_n, i_n, j_n) recursion. `cmp` records how c_{i}
/// compared to c_{j} at the previous row (kForced when j_{n-1} = k-1).
struct IjlRow {
  std::size_t n;
  Letter ell;
  std::size_t i;
  std::size_t j;
  Comparison cmp;
};

std::vector<IjlRow> ijl_sequences(const ParamWord& c, std::size_t n_max);

struct ConditionReport {
  bool frac_power_ok;    // U_{n+1} - 1 <= Q_n for n <= checked_bound
  bool dstar_le_a;       // d*[0,n] <= a[0,n] for n <= checked_bound
  bool max_conjugate;    // periodization maximal among its conjugates
  bool greedy;           // language-level greediness of S_c
  std::size_t checked_bound;  // k - 1 + |w|
  bool frac_power_direct;     // checked on materialized words, not via Q_n

  bool all_agree() const noexcept {
    return frac_power_ok == dstar_le_a && dstar_le_a == max_conjugate &&
           max_conjugate == greedy;
  }
  bool holds() const noexcept { return all_agree() && greedy; }
};

/// Evaluates the four assertions independently.
ConditionReport evaluate_conditions(const ParamWord& c);

/// As evaluate_conditions, but throws Error(kInternal) if they disagree.
ConditionReport check_conditions(const ParamWord& c);

enum class AttractorRule {
  kGammaN,          // m in [P_n, Q_n]
  kGammaNPlusUn,    // m in [U_n, Q_n]: Gamma_{n-1} + {U_n}
  kGammaNVerified,  // m in [U_n, P_n) but Gamma_n verified directly
};

struct PrefixAttractor {
  Attractor attractor;
  std::size_t n;
  AttractorRule rule;
};

/// Attractor of u[0, m) drawn from {U_n}. Requires the conditions to hold
/// (Error(kPrecondition) otherwise) and m >= 1 (Error(kDomain)).
/// With `verify`, the result is checked with is_attractor.
PrefixAttractor attractor_for_prefix(const ParamWord& c, std::uint64_t m,
                                     bool verify = false);

inline constexpr std::size_t kDefaultExactCap = 200;

struct ProfileEntry {
  std::uint64_t m;
  std::size_t size;
  Attractor witness;  // lexicographically least minimum attractor
};

/// Exact minimum attractor by hitting-set search. Throws
/// Error(kCapReached) when |w| > cap and Error(kDomain) on empty w.
ProfileEntry smallest_attractor(std::span<const Letter> w,
                                std::size_t cap = kDefaultExactCap);

struct Profile {
  std::vector<ProfileEntry> entries;  // m = 1 .. min(m_max, cap)
  bool truncated = false;             // m_max exceeded the cap
};

Profile profile(const ParamWord& c, std::uint64_t m_max,
                std::size_t cap = kDefaultExactCap);

struct MinimalFamilyReport {
  bool in_family;        // c_{k-1} = 1 and c_0..c_{k-2} a power of w
  Word anti_lyndon_root; // w
  std::size_t checked_up_to;
  std::optional<std::size_t> first_violation;  // n with P_n - 1 > Q_{n-1}
};

/// Requires the conditions to hold. Verifies P_n - 1 <= Q_{n-1} for
/// 1 <= n <= max(n_cap, 2k + 2) and throws Error(kInternal) if the
/// inequality pattern contradicts the characterization.
MinimalFamilyReport minimal_family_check(const ParamWord& c,
                                         std::size_t n_cap = 64);

/// i + 1 on [U_i, U_{i+1}) for i <= k - 2, k from U_{k-1} on.
std::size_t conjectured_profile(const ParamWord& c, std::uint64_t m);

struct ConjectureRow {
  std::uint64_t m;
  std::size_t observed;
  std::size_t predicted;
  bool agree;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  bool truncated = false;
  bool agree_all() const noexcept;
};

ConjectureReport conjecture_test(const ParamWord& c, std::uint64_t m_max,
                                 std::size_t cap = kDefaultExactCap);

std::string to_string(Comparison cmp);
std::string to_string(AttractorRule rule);

}  // namespace parrysa

#endif  // PARRYSA_ATTRACTORS_HPP_
