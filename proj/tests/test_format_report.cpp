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

#include <string>

#include "doctest.h"
#include "parrysa/format.hpp"
#include "parrysa/report.hpp"
#include "parrysa/sweep.hpp"

using parrysa::Error;
using parrysa::ErrorCode;
using parrysa::Json;
using parrysa::ParamWord;
using parrysa::Word;

TEST_CASE("digit words round-trip through text") {
  CHECK(parrysa::format_digits(Word{}) == "ε");
  CHECK(parrysa::format_digits(Word{1, 0, 2}) == "102");
  CHECK(parrysa::format_digits(Word{1, 10, 2}) == "1.10.2");
  CHECK(parrysa::parse_digits("1.10.2") == Word{1, 10, 2});
  CHECK(parrysa::parse_digits("102") == Word{1, 0, 2});
  CHECK(parrysa::parse_digits("ε").empty());
  CHECK(parrysa::parse_digits("").empty());
  CHECK(parrysa::parse_params("12.1") == ParamWord({12, 1}));
}

TEST_CASE("parse errors name the position") {
  try {
    parrysa::parse_digits("10x2");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parrysa::parse_digits("1..2"), Error);
  CHECK_THROWS_AS(parrysa::parse_digits("1.99999999999"), Error);
  CHECK_THROWS_AS(parrysa::parse_params("0"), Error);
  CHECK_THROWS_AS(parrysa::parse_natural("-3"), Error);
  CHECK(parrysa::parse_natural("123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
}

TEST_CASE("positions text") {
  const std::vector<std::uint64_t> p{3, 9};
  CHECK(parrysa::format_positions(p) == "{3,9}");
  CHECK(parrysa::format_positions(std::vector<std::uint64_t>{}) == "{}");
}

TEST_CASE("reports carry the schema and round-trip") {
  const ParamWord c({1, 0, 1, 1});
  for (const Json& j : {parrysa::check_report(c), parrysa::words_report(c, 6)}) {
    CHECK(j["schema"] == 1);
    CHECK(j["c"] == "1011");
    CHECK(Json::parse(j.dump()) == j);
  }
  const Json check = parrysa::check_report(c);
  CHECK(check["conditions"]["holds"] == true);
  CHECK(check["reduction"]["cprime"] == "11");
  const Json bad = parrysa::check_report(ParamWord({1, 0, 2}));
  CHECK(bad["reduction"].is_null());
}

TEST_CASE("parameter enumeration respects the hypothesis") {
  const auto params = parrysa::enumerate_params(2, 3, 2);
  CHECK(params.size() == 4 + 12);
  for (const auto& c : params) {
    CHECK(c[0] >= 1);
    CHECK(c[c.k() - 1] >= 1);
  }
  CHECK(params.front() == ParamWord({1, 1}));
  CHECK(params.back() == ParamWord({2, 2, 2}));
  CHECK_THROWS_AS(parrysa::enumerate_params(1, 3, 2), Error);
  CHECK_THROWS_AS(parrysa::enumerate_params(3, 2, 2), Error);
}

TEST_CASE("sweep output is independent of the job count") {
  parrysa::SweepSpec spec;
  spec.k_min = 2;
  spec.k_max = 3;
  spec.digit_max = 2;
  spec.m_max = 30;
  spec.jobs = 1;
  const std::string serial = parrysa::sweep_csv(parrysa::run_sweep(spec));
  spec.jobs = 4;
  const auto rows = parrysa::run_sweep(spec);
  CHECK(parrysa::sweep_csv(rows) == serial);
  for (const auto& r : rows) CHECK(r.conditions.all_agree());

  spec.only_greedy = true;
  for (const auto& r : parrysa::run_sweep(spec)) CHECK(r.conditions.holds());
  spec.only_minimal_family = true;
  for (const auto& r : parrysa::run_sweep(spec)) CHECK(r.minimal_family.value());

  const Json j = parrysa::sweep_json(spec, rows);
  CHECK(j["schema"] == 1);
  CHECK(Json::parse(j.dump()) == j);
}
