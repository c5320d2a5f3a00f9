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

#include "parrysa/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "parrysa/format.hpp"

namespace parrysa {

namespace {

SweepRow evaluate(const ParamWord& c, const SweepSpec& spec) {
  SweepRow row{c, check_conditions(c), std::nullopt, std::nullopt, std::nullopt};
  if (!row.conditions.holds()) return row;
  row.minimal_family = minimal_family_check(c).in_family;
  const ConjectureReport conj = conjecture_test(c, spec.m_max, spec.exact_cap);
  row.conjecture = conj.agree_all();
  for (const auto& r : conj.rows) {
    if (!r.agree) {
      row.first_disagreement = r.m;
      break;
    }
  }
  return row;
}

bool keep(const SweepRow& row, const SweepSpec& spec) {
  if (spec.only_greedy && !row.conditions.holds()) return false;
  if (spec.only_minimal_family && !row.minimal_family.value_or(false)) return false;
  return true;
}

const char* bit(bool b) { return b ? "1" : "0"; }

}  // namespace

std::vector<ParamWord> enumerate_params(std::size_t k_min, std::size_t k_max,
                                        Letter digit_max) {
  if (k_min < 2 || k_min > k_max) {
    throw Error(ErrorCode::kInvalidArgument, "sweep: k range must satisfy 2 <= k_min <= k_max");
  }
  if (digit_max < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sweep: digit_max must be >= 1");
  }
  if (k_max > kMaxAlphabet) {
    throw Error(ErrorCode::kInvalidArgument, "sweep: k_max exceeds the alphabet limit");
  }
  std::vector<ParamWord> out;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    Word digits(k, 0);
    digits.front() = 1;
    digits.back() = 1;
    for (;;) {
      out.emplace_back(digits);
      // Odometer, last digit fastest; the endpoints never drop to 0.
      std::size_t i = k;
      while (i > 0) {
        --i;
        const Letter floor = (i == 0 || i == k - 1) ? 1 : 0;
        if (digits[i] < digit_max) {
          ++digits[i];
          break;
        }
        digits[i] = floor;
        if (i == 0) {
          i = k + 1;  // wrapped
          break;
        }
      }
      if (i == k + 1) break;
    }
  }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const auto params = enumerate_params(spec.k_min, spec.k_max, spec.digit_max);
  std::vector<std::optional<SweepRow>> slots(params.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= params.size() || failed.load()) return;
      try {
        slots[idx] = evaluate(params[idx], spec);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(spec.jobs, params.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> rows;
  for (auto& s : slots) {
    if (keep(*s, spec)) rows.push_back(std::move(*s));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "schema,c,k,greedy,frac_power,dstar_le_a,max_conjugate,minimal_family,"
         "conjecture\n";
  for (const auto& r : rows) {
    out << kSchemaVersion << ',' << format_digits(r.c.digits()) << ',' << r.c.k()
        << ',' << bit(r.conditions.greedy) << ',' << bit(r.conditions.frac_power_ok)
        << ',' << bit(r.conditions.dstar_le_a) << ','
        << bit(r.conditions.max_conjugate) << ','
        << (r.minimal_family ? bit(*r.minimal_family) : "na") << ','
        << (r.conjecture ? (*r.conjecture ? "agree" : "disagree") : "na") << '\n';
  }
  return out.str();
}

Json sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "sweep";
  j["spec"] = Json{{"k_min", spec.k_min},
                   {"k_max", spec.k_max},
                   {"digit_max", spec.digit_max},
                   {"only_greedy", spec.only_greedy},
                   {"only_minimal_family", spec.only_minimal_family},
                   {"m_max", spec.m_max},
                   {"exact_cap", spec.exact_cap}};
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["c"] = format_digits(r.c.digits());
    row["k"] = r.c.k();
    row["conditions"] = to_json(r.conditions);
    row["minimal_family"] = r.minimal_family ? Json(*r.minimal_family) : Json(nullptr);
    row["conjecture"] = r.conjecture ? Json(*r.conjecture) : Json(nullptr);
    row["first_disagreement"] =
        r.first_disagreement ? Json(*r.first_disagreement) : Json(nullptr);
    out.push_back(std::move(row));
  }
  j["rows"] = std::move(out);
  return j;
}

}  // namespace parrysa
