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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "parrysa/format.hpp"
#include "parrysa/lyndon.hpp"
#include "parrysa/numeration.hpp"

using parrysa::BigInt;
using parrysa::Error;
using parrysa::ErrorCode;
using parrysa::ParamWord;
using parrysa::Word;

namespace {

std::string rep_text(const ParamWord& c, std::uint64_t n) {
  return parrysa::format_digits(parrysa::rep(c, BigInt(n)));
}

}  // namespace

TEST_CASE("representations for c = 102") {
  const ParamWord c({1, 0, 2});
  const std::vector<std::string> expected{"ε",   "1",    "10",   "100", "101",
                                          "1000", "1001", "1010", "1011"};
  for (std::uint64_t n = 0; n < expected.size(); ++n) CHECK(rep_text(c, n) == expected[n]);
  CHECK(rep_text(c, 14) == "10110");
  CHECK(parrysa::format_digits(parrysa::greedy_rep(c, 14)) == "11000");
  CHECK_FALSE(parrysa::is_greedy(c));
  CHECK_FALSE(parrysa::is_greedy_by_language(c));
  CHECK(parrysa::val(c, Word{1, 0, 1, 1}) == 8);
}

TEST_CASE("automaton for c = 102") {
  const ParamWord c({1, 0, 2});
  const std::string dot = parrysa::build_automaton(c).to_dot();
  std::istringstream in(dot);
  std::vector<std::string> edges;
  for (std::string line; std::getline(in, line);) {
    if (line.find("[label=") != std::string::npos) edges.push_back(line);
  }
  const std::vector<std::string> expected{
      "  0 -> 0 [label=\"0\"];", "  0 -> 1 [label=\"1\"];", "  1 -> 2 [label=\"0\"];",
      "  2 -> 0 [label=\"0\"];", "  2 -> 0 [label=\"1\"];"};
  CHECK(edges == expected);
  CHECK(dot.find("init -> 0;") != std::string::npos);
  CHECK(dot == parrysa::build_automaton(c).to_dot());
  CHECK(parrysa::build_automaton(ParamWord({1, 1})).transitions().size() == 3);
}

TEST_CASE("language enumeration matches exhaustive generation") {
  const ParamWord c({1, 0, 2});
  std::vector<std::string> first;
  for (const auto& w : parrysa::enumerate_language(c, 9)) first.push_back(parrysa::format_digits(w));
  CHECK(first == std::vector<std::string>{"ε", "1", "10", "100", "101", "1000", "1001",
                                          "1010", "1011"});
  for (const auto& d : oracle::family(2, 4, 2)) {
    const ParamWord p(d);
    const auto got = parrysa::enumerate_language(p, 60);
    const auto want = oracle::language(d, 60);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i] == want[i]);
      // rep(n) is the (n+1)-st accepted word.
      CHECK(parrysa::rep(p, BigInt(i)) == want[i]);
    }
  }
}

TEST_CASE("rep and val are inverse") {
  for (const auto& d : oracle::family(2, 4, 3)) {
    const ParamWord c(d);
    for (std::uint64_t n = 0; n <= 300; ++n) {
      const Word r = parrysa::rep(c, BigInt(n));
      CHECK(parrysa::val(c, r) == n);
      CHECK(parrysa::val_unchecked(c, r) == n);
    }
  }
}

TEST_CASE("rep of U_n and U_{n+1} - 1") {
  for (const auto& d : oracle::family(2, 4, 2)) {
    const ParamWord c(d);
    const auto u = parrysa::length_table(c, 22);
    for (std::size_t n = 0; n <= 20; ++n) {
      Word power(n + 1, 0);
      power[0] = 1;
      CHECK(parrysa::rep(c, u[n]) == power);
      if (parrysa::is_greedy(c)) {
        CHECK(parrysa::rep(c, u[n + 1] - 1) == parrysa::dstar(c, n + 1));
      }
    }
  }
}

TEST_CASE("val rejects words outside the language") {
  const ParamWord c({1, 0, 2});
  const Word leading{0, 1};
  const Word bad{1, 2};
  for (const Word& w : {leading, bad}) {
    try {
      parrysa::val(c, w);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kDomain);
      CHECK(std::string(e.what()).find("not in numeration language") != std::string::npos);
    }
  }
  CHECK(parrysa::val_unchecked(c, bad) == 2 * 1 + 2);
}

TEST_CASE("greediness: periodization test, language test and integer greedy agree") {
  for (const auto& d : oracle::family(2, 4, 3)) {
    const ParamWord c(d);
    const auto u = oracle::lengths(d, std::max<std::size_t>(3 * d.size() + 4, 14));
    const std::uint64_t limit = std::min<std::uint64_t>(u[2 * d.size() + 1], 20000);
    bool same = true;
    for (std::uint64_t n = 0; n < limit && same; ++n) {
      same = parrysa::rep(c, BigInt(n)) == oracle::integer_greedy(u, n);
    }
    INFO("c = ", parrysa::format_digits(d));
    CHECK(parrysa::is_greedy(c) == same);
    CHECK(parrysa::is_greedy_by_language(c) == same);
    for (std::uint64_t n = 0; n < 200; ++n) {
      CHECK(parrysa::greedy_rep(c, BigInt(n)) == oracle::integer_greedy(u, n));
    }
  }
}

TEST_CASE("Fibonacci reduction of c = 1011") {
  const ParamWord c({1, 0, 1, 1});
  const auto u = parrysa::length_table(c, 4);
  CHECK(u == std::vector<BigInt>{1, 2, 3, 5});
  const auto r = parrysa::reduce_parry(c);
  CHECK(parrysa::format_digits(r.cprime) == "11");
  CHECK(parrysa::format_digits(r.root) == "10");
  CHECK(r.power == 2);
  CHECK(std::abs(r.beta - 1.6180339887) < 1e-9);
  CHECK(r.admissible);
  const Word p = parrysa::prefix(c, 13);
  CHECK(parrysa::format_digits(p) == "0120301001201");
  CHECK(parrysa::format_digits(parrysa::sigma_project(r, p)) == "0100101001001");
}

TEST_CASE("reduction of a power-of-one root") {
  const auto r = parrysa::reduce_parry(ParamWord({1, 2}));
  CHECK(parrysa::format_digits(r.root) == "1");
  CHECK(r.power == 2);
  CHECK(parrysa::format_digits(r.cprime) == "2");
  CHECK(std::abs(r.beta - 2.0) < 1e-9);
}

TEST_CASE("reduction requires greediness") {
  try {
    parrysa::reduce_parry(ParamWord({1, 0, 2}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }
}

TEST_CASE("reduced roots are anti-Lyndon and beta solves the equation") {
  for (const auto& d : oracle::family(2, 4, 3)) {
    const ParamWord c(d);
    if (!parrysa::is_greedy(c)) continue;
    const auto r = parrysa::reduce_parry(c);
    CHECK(oracle::is_anti_lyndon(r.root));
    Word rebuilt;
    for (std::size_t i = 0; i < r.power; ++i) rebuilt.insert(rebuilt.end(), r.root.begin(), r.root.end());
    CHECK(rebuilt == c.periodization());
    double sum = 0;
    for (std::size_t i = 0; i < r.cprime.size(); ++i) {
      sum += r.cprime[i] / std::pow(r.beta, static_cast<double>(i + 1));
    }
    CHECK(std::abs(sum - 1.0) < 1e-9);
    CHECK(r.admissible);
  }
}

TEST_CASE("automatic letters reproduce the fixed point") {
  for (const auto& d : oracle::family(2, 3, 3)) {
    const ParamWord c(d);
    const Word p = parrysa::prefix(c, 150);
    for (std::uint64_t n = 0; n < p.size(); ++n) {
      CHECK(parrysa::automatic_letter(c, BigInt(n)) == p[n]);
    }
  }
}

TEST_CASE("large arguments") {
  const ParamWord c({2, 1, 1});
  const BigInt n = BigInt(1) << 150;
  const Word r = parrysa::rep(c, n);
  CHECK(parrysa::val(c, r) == n);
  CHECK(parrysa::val(c, parrysa::greedy_rep(c, n)) == n);
}

TEST_CASE("sigma projects onto the reduced fixed point") {
  for (const auto& d : oracle::family(2, 4, 3)) {
    const ParamWord c(d);
    if (!parrysa::is_greedy(c)) continue;
    const auto r = parrysa::reduce_parry(c);
    const Word p = parrysa::prefix(c, 200);
    const Word projected = parrysa::sigma_project(r, p);
    if (r.cprime.size() == 1) {
      CHECK(std::all_of(projected.begin(), projected.end(), [](auto a) { return a == 0; }));
    } else {
      CHECK(projected == parrysa::prefix(ParamWord(r.cprime), 200));
    }
    if (r.power == 1) CHECK(projected == p);
  }
}
