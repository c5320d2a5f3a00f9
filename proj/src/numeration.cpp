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

#include "parrysa/numeration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parrysa/lyndon.hpp"

namespace parrysa {

// ---------------------------------------------------------------------------
// Automaton

NumerationAutomaton::NumerationAutomaton(const ParamWord& c) : c_(c) {}

Letter NumerationAutomaton::out_degree(Letter state) const {
  return c_[state] + (state + 1 < c_.k() ? 1 : 0);
}

std::optional<Letter> NumerationAutomaton::target(Letter state,
                                                  Letter digit) const {
  if (state >= c_.k()) return std::nullopt;
  if (digit < c_[state]) return Letter{0};
  if (digit == c_[state] && state + 1 < c_.k()) return state + 1;
  return std::nullopt;
}

std::optional<Letter> NumerationAutomaton::run(
    std::span<const Letter> digits) const {
  Letter state = 0;
  for (Letter d : digits) {
    auto next = target(state, d);
    if (!next) return std::nullopt;
    state = *next;
  }
  return state;
}

std::vector<NumerationAutomaton::Transition> NumerationAutomaton::transitions()
    const {
  std::vector<Transition> out;
  for (Letter s = 0; s < c_.k(); ++s) {
    for (Letter d = 0; d < out_degree(s); ++d) out.push_back({s, d, *target(s, d)});
  }
  return out;
}

std::string NumerationAutomaton::to_dot() const {
  std::ostringstream os;
  os << "digraph numeration {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=doublecircle];\n";
  os << "  init [shape=point];\n";
  for (Letter s = 0; s < c_.k(); ++s) os << "  " << s << ";\n";
  os << "  init -> 0;\n";
  for (const auto& t : transitions()) {
    os << "  " << t.from << " -> " << t.to << " [label=\"" << t.digit << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

NumerationAutomaton build_automaton(const ParamWord& c) {
  return NumerationAutomaton(c);
}

// ---------------------------------------------------------------------------
// Numeration system

NumerationSystem::NumerationSystem(const ParamWord& c, std::size_t max_digits)
    : c_(c),
      automaton_(c),
      max_digits_(max_digits),
      lengths_(length_table(c, max_digits + 1)) {
  const std::size_t k = c.k();
  maxval_.assign(max_digits + 1, std::vector<BigInt>(k, BigInt(0)));
  for (std::size_t t = 1; t <= max_digits; ++t) {
    const BigInt& weight = lengths_[t - 1];
    for (std::size_t s = 0; s < k; ++s) {
      BigInt best = 0;
      if (s + 1 < k) {
        best = c[s] * weight + maxval_[t - 1][s + 1];
        if (c[s] > 0) {
          best = std::max(best, BigInt((c[s] - 1) * weight + maxval_[t - 1][0]));
        }
      } else {
        best = (c[s] - 1) * weight + maxval_[t - 1][0];
      }
      maxval_[t][s] = std::move(best);
    }
  }
}

NumerationSystem NumerationSystem::for_value(const ParamWord& c,
                                             const BigInt& n) {
  // Smallest `digits` with U_digits > n.
  const std::size_t k = c.k();
  std::vector<BigInt> u;
  while (u.empty() || u.back() <= n) {
    const std::size_t t = u.size();
    BigInt v = t < k ? BigInt(1) : BigInt(0);
    for (std::size_t i = 0; i < std::min(t, k); ++i) v += c[i] * u[t - i - 1];
    u.push_back(std::move(v));
  }
  return NumerationSystem(c, u.size() - 1);
}

const BigInt& NumerationSystem::maxval(Letter state, std::size_t t) const {
  return maxval_.at(t).at(state);
}

std::size_t NumerationSystem::digits_needed(const BigInt& n) const {
  if (n < 0) throw Error(ErrorCode::kDomain, "negative integer");
  std::size_t len = 0;
  while (len <= max_digits_ && lengths_[len] <= n) ++len;
  if (len > max_digits_) {
    throw Error(ErrorCode::kDomain, "value exceeds the system's digit capacity");
  }
  return len;
}

Representation NumerationSystem::rep(const BigInt& n) const {
  const std::size_t len = digits_needed(n);
  Representation out;
  out.reserve(len);
  BigInt rest = n;
  Letter state = 0;
  for (std::size_t pos = 0; pos < len; ++pos) {
    const std::size_t t = len - 1 - pos;  // digits still to come
    const BigInt& weight = lengths_[t];
    const bool has_step = state + 1 < c_.k();
    const Letter step = c_[state];
    if (has_step && step * weight <= rest &&
        rest - step * weight <= maxval_[t][state + 1]) {
      out.push_back(step);
      rest -= step * weight;
      state = state + 1;
      continue;
    }
    // Digits 0 .. c_state - 1 return to state 0.
    const Letter top = step;
    if (top == 0) {
      throw Error(ErrorCode::kInternal, "rep: no admissible digit");
    }
    BigInt quotient = rest / weight;
    const Letter d =
        quotient >= top ? top - 1 : static_cast<Letter>(quotient);
    rest -= d * weight;
    if (rest > maxval_[t][0]) {
      throw Error(ErrorCode::kInternal, "rep: remainder not representable");
    }
    out.push_back(d);
    state = 0;
  }
  if (rest != 0 || (!out.empty() && out.front() == 0)) {
    throw Error(ErrorCode::kInternal, "rep: walk did not terminate at zero");
  }
  return out;
}

Representation NumerationSystem::greedy_rep(const BigInt& n) const {
  const std::size_t len = digits_needed(n);
  Representation out;
  out.reserve(len);
  BigInt rest = n;
  for (std::size_t pos = 0; pos < len; ++pos) {
    const BigInt& weight = lengths_[len - 1 - pos];
    BigInt d = rest / weight;
    rest -= d * weight;
    out.push_back(static_cast<Letter>(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free functions

std::vector<Representation> enumerate_language(const ParamWord& c,
                                               std::size_t count) {
  const NumerationAutomaton a(c);
  std::vector<Representation> out;
  if (count == 0) return out;
  out.push_back({});
  Representation current;
  // Depth-first, digits ascending, gives lexicographic order per length.
  auto extend = [&](auto&& self, Letter state, std::size_t remaining) -> void {
    if (out.size() >= count) return;
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    const Letter first = current.empty() ? 1 : 0;
    for (Letter d = first; d < a.out_degree(state); ++d) {
      current.push_back(d);
      self(self, *a.target(state, d), remaining - 1);
      current.pop_back();
      if (out.size() >= count) return;
    }
  };
  for (std::size_t len = 1; out.size() < count; ++len) extend(extend, 0, len);
  return out;
}

Representation rep(const ParamWord& c, const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::kDomain, "rep: negative integer");
  return NumerationSystem::for_value(c, n).rep(n);
}

Representation greedy_rep(const ParamWord& c, const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::kDomain, "greedy_rep: negative integer");
  return NumerationSystem::for_value(c, n).greedy_rep(n);
}

BigInt val_unchecked(const ParamWord& c, std::span<const Letter> digits) {
  const auto u = length_table(c, digits.size());
  BigInt total = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    total += digits[i] * u[digits.size() - 1 - i];
  }
  return total;
}

BigInt val(const ParamWord& c, std::span<const Letter> digits) {
  if (!digits.empty() && digits.front() == 0) {
    throw Error(ErrorCode::kDomain,
                "not in numeration language: leading digit 0");
  }
  const NumerationAutomaton a(c);
  Letter state = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    auto next = a.target(state, digits[i]);
    if (!next) {
      throw Error(ErrorCode::kDomain,
                  "not in numeration language: digit " +
                      std::to_string(digits[i]) + " at position " +
                      std::to_string(i + 1) + " from state " + std::to_string(state));
    }
    state = *next;
  }
  return val_unchecked(c, digits);
}

Word dstar(const ParamWord& c, std::size_t length) {
  const Word period = c.periodization();
  Word out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = period[i % period.size()];
  return out;
}

bool is_greedy(const ParamWord& c) {
  return is_max_conjugate(c.periodization());
}

bool is_greedy_by_language(const ParamWord& c) {
  const std::size_t k = c.k();
  const NumerationAutomaton a(c);
  const Word d = c.periodization();

  // Every state is reached by a language word (c_0 ... c_{i-1} leads to
  // state i and c_0 >= 1), so every state may start a suffix.
  // Paths that have matched d*[0, offset) so far, offset taken mod k.
  std::vector<std::vector<bool>> seen(k, std::vector<bool>(k, false));
  std::vector<std::pair<Letter, std::size_t>> todo;
  for (Letter s = 0; s < k; ++s) {
    seen[s][0] = true;
    todo.emplace_back(s, 0);
  }
  while (!todo.empty()) {
    auto [s, offset] = todo.back();
    todo.pop_back();
    const Letter bound = d[offset];
    // The largest digit from s is out_degree - 1; anything above the bound
    // makes the path exceed d*.
    if (a.out_degree(s) > bound + 1) return false;
    if (bound < a.out_degree(s)) {
      const Letter next = *a.target(s, bound);
      const std::size_t next_offset = (offset + 1) % k;
      if (!seen[next][next_offset]) {
        seen[next][next_offset] = true;
        todo.emplace_back(next, next_offset);
      }
    }
  }
  return true;
}

ParryReduction reduce_parry(const ParamWord& c) {
  if (!is_greedy(c)) {
    throw Error(ErrorCode::kPrecondition,
                "reduce_parry: c_0..c_{k-2}(c_{k-1}-1) is not maximal among "
                "its conjugates");
  }
  const Word d = c.periodization();
  std::size_t p = smallest_period(d);
  if (d.size() % p != 0) p = d.size();

  ParryReduction r;
  r.root.assign(d.begin(), d.begin() + p);
  r.power = d.size() / p;
  r.cprime = r.root;
  r.cprime.back() += 1;

  if (!is_anti_lyndon(r.root)) {
    throw Error(ErrorCode::kInternal, "reduce_parry: primitive root not anti-Lyndon");
  }

  // Parry: sigma^i(c'0^omega) < c'0^omega for 1 <= i < j.
  r.admissible = true;
  const std::size_t j = r.cprime.size();
  for (std::size_t i = 1; i < j; ++i) {
    Word shifted(r.cprime.begin() + i, r.cprime.end());
    shifted.resize(j, 0);
    if (lex_compare(shifted, r.cprime) >= 0) r.admissible = false;
  }

  double sum = 0.0;
  for (Letter x : r.cprime) sum += x;
  auto f = [&](double x) {
    double total = 0.0;
    double inv = 1.0;
    for (Letter digit : r.cprime) {
      inv /= x;
      total += digit * inv;
    }
    return total - 1.0;
  };
  // f is strictly decreasing on (1, inf), f(1) >= 0 > f(1 + sum).
  double lo = 1.0;
  double hi = 1.0 + sum;
  while (hi - lo > 1e-12) {
    const double mid = lo + (hi - lo) / 2;
    if (mid == lo || mid == hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  r.beta = lo + (hi - lo) / 2;
  r.beta_error = hi - lo;
  return r;
}

Word sigma_project(const ParryReduction& reduction, std::span<const Letter> w) {
  const Letter j = static_cast<Letter>(reduction.cprime.size());
  Word out(w.begin(), w.end());
  for (Letter& a : out) a %= j;
  return out;
}

Letter automatic_letter(const ParamWord& c, const BigInt& n) {
  const auto state = NumerationAutomaton(c).run(rep(c, n));
  if (!state) throw Error(ErrorCode::kInternal, "rep produced a rejected word");
  return *state;
}

}  // namespace parrysa
