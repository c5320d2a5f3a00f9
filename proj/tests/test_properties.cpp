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

// Randomized properties over parameter words beyond the fixed family.

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "parrysa/attractors.hpp"
#include "parrysa/format.hpp"
#include "parrysa/lyndon.hpp"
#include "parrysa/numeration.hpp"

using parrysa::BigInt;
using parrysa::ParamWord;
using parrysa::Word;

namespace {

ParamWord random_param(std::mt19937_64& rng, std::size_t k_max, parrysa::Letter digit_max) {
  const std::size_t k = 2 + rng() % (k_max - 1);
  Word d(k);
  for (auto& x : d) x = rng() % (digit_max + 1);
  if (d.front() == 0) d.front() = 1;
  if (d.back() == 0) d.back() = 1;
  return ParamWord(d);
}

BigInt random_big(std::mt19937_64& rng, int words) {
  BigInt v = 0;
  for (int i = 0; i < words; ++i) v = (v << 64) + rng();
  return v;
}

}  // namespace

TEST_CASE("rep is accepted and inverts val for random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const ParamWord c = random_param(rng, 7, 5);
    const BigInt n = random_big(rng, 1 + trial % 3);
    const Word r = parrysa::rep(c, n);
    CHECK(parrysa::val(c, r) == n);
    CHECK(parrysa::val_unchecked(c, parrysa::greedy_rep(c, n)) == n);
    if (parrysa::is_greedy(c)) CHECK(parrysa::greedy_rep(c, n) == r);
  }
}

TEST_CASE("rep preserves the genealogical order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const ParamWord c = random_param(rng, 6, 4);
    const std::uint64_t a = rng() % 100000;
    const std::uint64_t b = a + 1 + rng() % 1000;
    CHECK(parrysa::gen_compare(parrysa::rep(c, BigInt(a)), parrysa::rep(c, BigInt(b)),
                               parrysa::Order::kStandard) < 0);
  }
}

TEST_CASE("conditions agree on random longer parameter words") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const ParamWord c = random_param(rng, 9, 4);
    INFO("c = ", parrysa::format_digits(c.digits()));
    CHECK(parrysa::evaluate_conditions(c).all_agree());
    const Word d = c.periodization();
    bool max_conj = true;
    for (std::size_t r = 1; r < d.size(); ++r) {
      Word rot(d.begin() + static_cast<std::ptrdiff_t>(r), d.end());
      rot.insert(rot.end(), d.begin(), d.begin() + static_cast<std::ptrdiff_t>(r));
      if (rot > d) max_conj = false;
    }
    CHECK(parrysa::is_greedy(c) == max_conj);
  }
}

TEST_CASE("Q_n formula and direct comparison agree on random greedy words") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 60) {
    const ParamWord c = random_param(rng, 7, 3);
    if (!parrysa::is_greedy(c)) continue;
    ++checked;
    for (std::size_t n = 0; n <= 6; ++n) {
      CHECK(parrysa::q_n_formula(c, n) == parrysa::q_n_direct(c, n));
    }
  }
}

TEST_CASE("constructed attractors verify on random greedy words") {
  std::mt19937_64 rng(19);
  int checked = 0;
  while (checked < 40) {
    const ParamWord c = random_param(rng, 6, 3);
    if (!parrysa::is_greedy(c)) continue;
    ++checked;
    const Word u = parrysa::prefix(c, 400);
    for (int t = 0; t < 10; ++t) {
      const std::uint64_t m = 1 + rng() % 400;
      const auto a = parrysa::attractor_for_prefix(c, m);
      const Word w(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(m));
      CHECK(parrysa::is_attractor(w, a.attractor));
    }
  }
}
