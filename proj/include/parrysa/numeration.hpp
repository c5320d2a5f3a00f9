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

// The Dumont-Thomas numeration system S_c attached to mu_c.
//
// rep(n) is the (n+1)st word, in genealogical order, of the language of the
// automaton A_c that does not start with 0; val is the positional valuation
// against (U_n). Representations are most significant digit first and may
// use digits above 9.

#ifndef PARRYSA_NUMERATION_HPP_
#define PARRYSA_NUMERATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parrysa/types.hpp"
#include "parrysa/words.hpp"

namespace parrysa {

/// Digit strings, most significant first. Empty represents 0.
using Representation = std::vector<Letter>;

/// A_c: states 0..k-1, all final, initial state 0. From state i the digit
/// d leads to the (d+1)st letter of mu_c(i).
class NumerationAutomaton {
 public:
  explicit NumerationAutomaton(const ParamWord& c);

  std::size_t states() const noexcept { return c_.k(); }

  /// Number of outgoing digits of `state`: |mu_c(state)|.
  Letter out_degree(Letter state) const;

  /// Target of (state, digit), or nullopt when undefined.
  std::optional<Letter> target(Letter state, Letter digit) const;

  /// Runs `digits` from state 0; nullopt if a transition is missing.
  std::optional<Letter> run(std::span<const Letter> digits) const;

  struct Transition {
    Letter from;
    Letter digit;
    Letter to;
  };

  /// All transitions sorted by (from, digit).
  std::vector<Transition> transitions() const;

  /// Graphviz rendering, one edge line per transition.
  std::string to_dot() const;

 private:
  ParamWord c_;
};

NumerationAutomaton build_automaton(const ParamWord& c);

/// Precomputed U_t and maxval(s, t) for representations of up to
/// `max_digits` digits. Immutable after construction.
class NumerationSystem {
 public:
  NumerationSystem(const ParamWord& c, std::size_t max_digits);

  /// Smallest system able to represent every value <= n.
  static NumerationSystem for_value(const ParamWord& c, const BigInt& n);

  const ParamWord& params() const noexcept { return c_; }
  const NumerationAutomaton& automaton() const noexcept { return automaton_; }
  std::size_t max_digits() const noexcept { return max_digits_; }

  /// U_t for 0 <= t <= max_digits.
  const BigInt& length(std::size_t t) const { return lengths_.at(t); }

  /// Largest valuation of a length-t path leaving `state`.
  const BigInt& maxval(Letter state, std::size_t t) const;

  Representation rep(const BigInt& n) const;
  Representation greedy_rep(const BigInt& n) const;

 private:
  std::size_t digits_needed(const BigInt& n) const;

  ParamWord c_;
  NumerationAutomaton automaton_;
  std::size_t max_digits_;
  std::vector<BigInt> lengths_;              // U_0 .. U_{max_digits}
  std::vector<std::vector<BigInt>> maxval_;  // [t][state]
};

/// First `count` words of the numeration language in genealogical order.
std::vector<Representation> enumerate_language(const ParamWord& c,
                                               std::size_t count);

Representation rep(const ParamWord& c, const BigInt& n);

/// Valuation of an accepted word; throws Error(kDomain) with
/// "not in numeration language" otherwise.
BigInt val(const ParamWord& c, std::span<const Letter> digits);

/// Positional valuation of an arbitrary digit word.
BigInt val_unchecked(const ParamWord& c, std::span<const Letter> digits);

/// Largest-term-first greedy representation against (U_n).
Representation greedy_rep(const ParamWord& c, const BigInt& n);

/// First `length` digits of d* = (c_0 ... c_{k-2} (c_{k-1}-1))^omega.
Word dstar(const ParamWord& c, std::size_t length);

/// c_0 ... c_{k-2}(c_{k-1}-1) is maximal among its conjugates.
bool is_greedy(const ParamWord& c);

/// Greediness decided on the numeration language: every path leaving a
/// state reachable by a language word is <= the prefix of d* of the same
/// length. Explores the product of A_c with the periodic word d*.
bool is_greedy_by_language(const ParamWord& c);

struct ParryReduction {
  Word root;          // v, anti-Lyndon, with c_0..c_{k-2}(c_{k-1}-1) = v^power
  std::size_t power;  // k / |v|
  Word cprime;        // v with its last digit incremented
  double beta;        // root > 1 of sum c'_i x^{-(i+1)} = 1
  double beta_error;  // width of the final bisection bracket
  bool admissible;    // every proper suffix of c'0^omega is below c'0^omega
};

/// Requires is_greedy(c); throws Error(kPrecondition) otherwise.
ParryReduction reduce_parry(const ParamWord& c);

/// Letterwise i -> i mod |reduction.cprime|.
Word sigma_project(const ParryReduction& reduction, std::span<const Letter> w);

/// Letter u_n, read off by running rep(n) through A_c.
Letter automatic_letter(const ParamWord& c, const BigInt& n);

}  // namespace parrysa

#endif  // PARRYSA_NUMERATION_HPP_
