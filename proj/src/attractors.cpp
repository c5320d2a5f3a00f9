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

#include "parrysa/attractors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "factor_classes.hpp"
#include "parrysa/lyndon.hpp"
#include "parrysa/numeration.hpp"

namespace parrysa {

namespace {

// Above this many letters the claim-1 shortcut is not verified.
constexpr std::uint64_t kVerifyLimit = std::uint64_t{1} << 20;

// Materializing the frac-power assertion directly stops here.
constexpr std::uint64_t kDirectCheckLimit = std::uint64_t{1} << 24;

Position to_position(const BigInt& v) {
  if (v > std::numeric_limits<Position>::max()) {
    throw Error(ErrorCode::kDomain, "position does not fit in 64 bits");
  }
  return static_cast<Position>(v);
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kDomain, std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Attractor make_attractor(std::vector<Position> positions, std::uint64_t word_len) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  for (Position p : positions) {
    if (p < 1 || p > word_len) {
      throw Error(ErrorCode::kDomain, "attractor position " + std::to_string(p) +
                                          " outside [1, " +
                                          std::to_string(word_len) + "]");
    }
  }
  return Attractor{std::move(positions), word_len};
}

bool is_attractor(std::span<const Letter> w, const Attractor& gamma) {
  if (gamma.word_len != w.size()) {
    throw Error(ErrorCode::kDomain, "attractor refers to a word of length " +
                                        std::to_string(gamma.word_len) +
                                        ", got " + std::to_string(w.size()));
  }
  for (Position p : gamma.positions) {
    if (p < 1 || p > w.size()) {
      throw Error(ErrorCode::kDomain,
                  "attractor position " + std::to_string(p) + " out of range");
    }
  }
  const std::size_t n = w.size();
  if (n == 0) return true;

  // reach[s]: distance from s to the nearest attractor position >= s.
  // An occurrence [s, s + len) crosses a position iff reach[s] < len.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> reach(n, kNone);
  {
    std::vector<bool> marked(n, false);
    for (Position p : gamma.positions) marked[p - 1] = true;
    std::size_t next = kNone;
    for (std::size_t s = n; s-- > 0;) {
      if (marked[s]) next = s;
      reach[s] = next == kNone ? kNone : next - s;
    }
  }

  const detail::FactorIndex index(w);
  const auto& sa = index.suffix_array();

  // Sparse table of reach in suffix-array order.
  std::vector<std::vector<std::size_t>> table(1, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) table[0][i] = reach[sa[i]];
  for (std::size_t lvl = 1; (std::size_t{1} << lvl) <= n; ++lvl) {
    const std::size_t half = std::size_t{1} << (lvl - 1);
    std::vector<std::size_t> row(n - (std::size_t{1} << lvl) + 1);
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i] = std::min(table[lvl - 1][i], table[lvl - 1][i + half]);
    }
    table.push_back(std::move(row));
  }
  auto range_min = [&](std::size_t lb, std::size_t rb) {
    const std::size_t lvl = std::bit_width(rb - lb + 1) - 1;
    return std::min(table[lvl][lb], table[lvl][rb + 1 - (std::size_t{1} << lvl)]);
  };

  for (const auto& cls : index.classes()) {
    const std::size_t best = range_min(cls.lb, cls.rb);
    if (best == kNone || best >= cls.min_length) return false;
  }
  return true;
}

std::vector<BigInt> gamma_n_exact(const ParamWord& c, std::int64_t n) {
  if (n < -1) throw Error(ErrorCode::kDomain, "gamma_n: n must be >= -1");
  if (n == -1) return {};
  const auto idx = static_cast<std::size_t>(n);
  const auto u = length_table(c, idx + 1);
  const std::size_t first = idx + 1 <= c.k() ? 0 : idx - c.k() + 1;
  return std::vector<BigInt>(u.begin() + first, u.end());
}

std::vector<Position> gamma_n(const ParamWord& c, std::int64_t n) {
  std::vector<Position> out;
  for (const auto& v : gamma_n_exact(c, n)) out.push_back(to_position(v));
  return out;
}

BigInt p_n(const ParamWord& c, std::size_t n) {
  const auto u = length_table(c, n + 1);
  if (n < c.k()) return u[n];
  return u[n] + u[n - c.k() + 1] - u[n - c.k()] - 1;
}

BigInt q_n_formula(const ParamWord& c, std::size_t n) {
  const auto u = length_table(c, n + 1);
  const Word a = anti_lyndon_stream(c, n + 1);
  BigInt q = 0;
  for (std::size_t i = 0; i <= n; ++i) q += a[i] * u[n - i];
  return q;
}

BigInt q_n_direct(const ParamWord& c, std::size_t n, std::uint64_t cap) {
  if (cap == 0) cap = to_u64(4 * length_un(c, n + 1), "default cap");
  const Word un = word_un(c, n);
  const Word u = prefix(c, cap);
  std::uint64_t q = 0;
  while (q < cap && u[q] == un[q % un.size()]) ++q;
  if (q == cap) {
    throw Error(ErrorCode::kCapReached,
                "q_n_direct: inconclusive, common prefix reached cap " +
                    std::to_string(cap));
  }
  return BigInt(q);
}

std::vector<IjlRow> ijl_sequences(const ParamWord& c, std::size_t n_max) {
  const std::size_t k = c.k();
  std::vector<IjlRow> rows;
  rows.reserve(n_max + 1);
  rows.push_back({0, c[0], 0, 1, Comparison::kNone});
  while (rows.size() <= n_max) {
    const IjlRow& prev = rows.back();
    IjlRow next{prev.n + 1, 0, 0, 0, Comparison::kNone};
    if (prev.j == k - 1) {
      next = {prev.n + 1, c[prev.i], 0, prev.i + 1, Comparison::kForced};
    } else if (c[prev.i] > c[prev.j]) {
      next = {prev.n + 1, c[prev.j], 0, prev.j + 1, Comparison::kGreater};
    } else if (c[prev.i] == c[prev.j]) {
      next = {prev.n + 1, c[prev.j], prev.i + 1, prev.j + 1, Comparison::kEqual};
    } else {
      next = {prev.n + 1, c[prev.i], 0, prev.i + 1, Comparison::kLess};
    }
    rows.push_back(next);
  }
  return rows;
}

ConditionReport evaluate_conditions(const ParamWord& c) {
  const std::size_t k = c.k();
  const auto& digits = c.digits();
  const Word w =
      longest_anti_lyndon_prefix(std::span<const Letter>(digits).first(k - 1));
  const std::size_t bound = k - 1 + w.size();

  ConditionReport r{};
  r.checked_bound = bound;

  // (1) u[0, U_{n+1} - 1) is a fractional power of u_n.
  const auto u = length_table(c, bound + 2);
  r.frac_power_direct = u[bound + 1] - 1 <= kDirectCheckLimit;
  r.frac_power_ok = true;
  if (r.frac_power_direct) {
    const Word pre = prefix(c, static_cast<std::uint64_t>(u[bound + 1] - 1));
    for (std::size_t n = 0; n <= bound && r.frac_power_ok; ++n) {
      const auto period = static_cast<std::size_t>(u[n]);
      const auto len = static_cast<std::size_t>(u[n + 1] - 1);
      for (std::size_t i = period; i < len; ++i) {
        if (pre[i] != pre[i - period]) {
          r.frac_power_ok = false;
          break;
        }
      }
    }
  } else {
    for (std::size_t n = 0; n <= bound && r.frac_power_ok; ++n) {
      r.frac_power_ok = u[n + 1] - 1 <= q_n_formula(c, n);
    }
  }

  // (2) d*[0, n] <= a[0, n]; equal lengths, so one comparison per n.
  const Word d = dstar(c, bound + 1);
  const Word a = anti_lyndon_stream(c, bound + 1);
  r.dstar_le_a = true;
  for (std::size_t n = 0; n <= bound; ++n) {
    if (lex_compare(std::span<const Letter>(d).first(n + 1),
                    std::span<const Letter>(a).first(n + 1)) > 0) {
      r.dstar_le_a = false;
      break;
    }
  }

  r.max_conjugate = is_max_conjugate(c.periodization());
  r.greedy = is_greedy_by_language(c);
  return r;
}

ConditionReport check_conditions(const ParamWord& c) {
  ConditionReport r = evaluate_conditions(c);
  if (!r.all_agree()) {
    throw Error(ErrorCode::kInternal,
                std::string("equivalent conditions disagree: frac_power=") +
                    (r.frac_power_ok ? "1" : "0") +
                    " dstar_le_a=" + (r.dstar_le_a ? "1" : "0") +
                    " max_conjugate=" + (r.max_conjugate ? "1" : "0") +
                    " greedy=" + (r.greedy ? "1" : "0"));
  }
  return r;
}

PrefixAttractor attractor_for_prefix(const ParamWord& c, std::uint64_t m,
                                     bool verify) {
  if (m == 0) throw Error(ErrorCode::kDomain, "attractor_for_prefix: m must be >= 1");
  if (!check_conditions(c).holds()) {
    throw Error(ErrorCode::kPrecondition,
                "attractor_for_prefix: outside theorem scope (S_c is not greedy)");
  }
  const BigInt target = m;

  // Candidate indices n have U_n <= m.
  std::vector<BigInt> u = length_table(c, 2);
  while (u.back() <= target) u = length_table(c, u.size() + 1);
  const std::size_t last = u.size() - 2;

  std::optional<PrefixAttractor> chosen;
  for (std::size_t n = 0; n <= last && !chosen; ++n) {
    if (p_n(c, n) <= target && target <= q_n_formula(c, n)) {
      chosen = PrefixAttractor{make_attractor(gamma_n(c, static_cast<std::int64_t>(n)), m),
                               n, AttractorRule::kGammaN};
    }
  }
  for (std::size_t n = 0; n <= last && !chosen; ++n) {
    if (u[n] > target || target > q_n_formula(c, n)) continue;
    auto positions = gamma_n(c, static_cast<std::int64_t>(n) - 1);
    positions.push_back(to_position(u[n]));
    chosen = PrefixAttractor{make_attractor(std::move(positions), m), n,
                             AttractorRule::kGammaNPlusUn};
    // Gamma_n may already suffice below P_n.
    if (m <= kVerifyLimit) {
      Attractor smaller = make_attractor(gamma_n(c, static_cast<std::int64_t>(n)), m);
      if (smaller.size() < chosen->attractor.size() &&
          is_attractor(prefix(c, m), smaller)) {
        chosen = PrefixAttractor{std::move(smaller), n, AttractorRule::kGammaNVerified};
      }
    }
  }
  if (!chosen) {
    throw Error(ErrorCode::kInternal,
                "attractor_for_prefix: no interval [U_n, Q_n] contains m");
  }
  if (verify && !is_attractor(prefix(c, m), chosen->attractor)) {
    throw Error(ErrorCode::kInternal,
                "attractor_for_prefix: constructed set is not an attractor");
  }
  return *chosen;
}

ProfileEntry smallest_attractor(std::span<const Letter> w, std::size_t cap) {
  if (w.empty()) throw Error(ErrorCode::kDomain, "smallest_attractor: empty word");
  if (w.size() > cap) {
    throw Error(ErrorCode::kCapReached,
                "smallest_attractor: word length " + std::to_string(w.size()) +
                    " exceeds exact-search cap " + std::to_string(cap));
  }
  const std::set<Letter> letters(w.begin(), w.end());
  const auto constraints = detail::attractor_constraints(w);
  const auto best = detail::minimum_hitting_set(constraints, w.size(), letters.size());
  std::vector<Position> positions;
  for (std::size_t p : best) positions.push_back(p + 1);
  ProfileEntry entry{w.size(), positions.size(), make_attractor(positions, w.size())};
  return entry;
}

Profile profile(const ParamWord& c, std::uint64_t m_max, std::size_t cap) {
  Profile out;
  const std::uint64_t top = std::min<std::uint64_t>(m_max, cap);
  out.truncated = m_max > cap;
  const Word u = prefix(c, top);
  for (std::uint64_t m = 1; m <= top; ++m) {
    out.entries.push_back(smallest_attractor(std::span<const Letter>(u).first(m), cap));
  }
  return out;
}

MinimalFamilyReport minimal_family_check(const ParamWord& c, std::size_t n_cap) {
  if (!check_conditions(c).holds()) {
    throw Error(ErrorCode::kPrecondition,
                "minimal_family_check: outside theorem scope (S_c is not greedy)");
  }
  const std::size_t k = c.k();
  const auto& digits = c.digits();
  const auto head = std::span<const Letter>(digits).first(k - 1);

  MinimalFamilyReport r;
  r.anti_lyndon_root = longest_anti_lyndon_prefix(head);
  const std::size_t len = r.anti_lyndon_root.size();
  bool power = head.size() % len == 0;
  for (std::size_t i = 0; power && i < head.size(); ++i) {
    power = head[i] == r.anti_lyndon_root[i % len];
  }
  r.in_family = c[k - 1] == 1 && power;

  r.checked_up_to = std::max(n_cap, 2 * k + 2);
  for (std::size_t n = 1; n <= r.checked_up_to && !r.first_violation; ++n) {
    if (p_n(c, n) - 1 > q_n_formula(c, n - 1)) r.first_violation = n;
  }
  if (r.in_family == r.first_violation.has_value()) {
    throw Error(ErrorCode::kInternal,
                "minimal_family_check: P_n - 1 <= Q_{n-1} pattern contradicts "
                "the family characterization");
  }
  return r;
}

std::size_t conjectured_profile(const ParamWord& c, std::uint64_t m) {
  const auto u = length_table(c, c.k());
  const BigInt target = m;
  for (std::size_t i = 0; i + 1 < c.k(); ++i) {
    if (u[i] <= target && target < u[i + 1]) return i + 1;
  }
  return c.k();
}

bool ConjectureReport::agree_all() const noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ConjectureRow& r) { return r.agree; });
}

ConjectureReport conjecture_test(const ParamWord& c, std::uint64_t m_max,
                                 std::size_t cap) {
  if (!check_conditions(c).holds()) {
    throw Error(ErrorCode::kPrecondition,
                "conjecture_test: outside theorem scope (S_c is not greedy)");
  }
  const Profile prof = profile(c, m_max, cap);
  ConjectureReport r;
  r.truncated = prof.truncated;
  for (const auto& e : prof.entries) {
    const std::size_t predicted = conjectured_profile(c, e.m);
    r.rows.push_back({e.m, e.size, predicted, predicted == e.size});
  }
  return r;
}

std::string to_string(Comparison cmp) {
  switch (cmp) {
    case Comparison::kNone: return "none";
    case Comparison::kGreater: return "greater";
    case Comparison::kEqual: return "equal";
    case Comparison::kLess: return "less";
    case Comparison::kForced: return "forced";
  }
  return "none";
}

std::string to_string(AttractorRule rule) {
  switch (rule) {
    case AttractorRule::kGammaN: return "gamma_n";
    case AttractorRule::kGammaNPlusUn: return "gamma_prev_plus_un";
    case AttractorRule::kGammaNVerified: return "gamma_n_verified";
  }
  return "gamma_n";
}

}  // namespace parrysa
