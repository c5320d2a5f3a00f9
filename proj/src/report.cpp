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

#include "parrysa/report.hpp"

#include "parrysa/format.hpp"

namespace parrysa {

Json report_header(const std::string& command, const ParamWord& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["c"] = format_digits(c.digits());
  return j;
}

Json to_json(const BigInt& v) { return v.str(); }

Json to_json(const ConditionReport& r) {
  Json j;
  j["frac_power"] = r.frac_power_ok;
  j["dstar_le_a"] = r.dstar_le_a;
  j["max_conjugate"] = r.max_conjugate;
  j["greedy"] = r.greedy;
  j["all_agree"] = r.all_agree();
  j["holds"] = r.holds();
  j["checked_bound"] = r.checked_bound;
  j["frac_power_direct"] = r.frac_power_direct;
  return j;
}

Json to_json(const ParryReduction& r) {
  Json j;
  j["root"] = format_digits(r.root);
  j["power"] = r.power;
  j["cprime"] = format_digits(r.cprime);
  j["beta"] = r.beta;
  j["beta_error"] = r.beta_error;
  j["admissible"] = r.admissible;
  return j;
}

Json to_json(const Attractor& a, bool zero_based) {
  Json positions = Json::array();
  for (Position p : a.positions) positions.push_back(zero_based ? p - 1 : p);
  Json j;
  j["m"] = a.word_len;
  j["base"] = zero_based ? 0 : 1;
  j["positions"] = std::move(positions);
  j["size"] = a.size();
  return j;
}

Json to_json(const PrefixAttractor& a, bool zero_based) {
  Json j = to_json(a.attractor, zero_based);
  j["n"] = a.n;
  j["rule"] = to_string(a.rule);
  return j;
}

Json to_json(const Profile& p, bool zero_based) {
  Json entries = Json::array();
  for (const auto& e : p.entries) {
    Json row;
    row["m"] = e.m;
    row["size"] = e.size;
    row["witness"] = to_json(e.witness, zero_based)["positions"];
    entries.push_back(std::move(row));
  }
  Json j;
  j["entries"] = std::move(entries);
  j["truncated"] = p.truncated;
  return j;
}

Json to_json(const MinimalFamilyReport& r) {
  Json j;
  j["in_family"] = r.in_family;
  j["anti_lyndon_root"] = format_digits(r.anti_lyndon_root);
  j["checked_up_to"] = r.checked_up_to;
  j["first_violation"] =
      r.first_violation ? Json(*r.first_violation) : Json(nullptr);
  return j;
}

Json to_json(const ConjectureReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"m", row.m},
                        {"observed", row.observed},
                        {"predicted", row.predicted},
                        {"agree", row.agree}});
  }
  Json j;
  j["rows"] = std::move(rows);
  j["truncated"] = r.truncated;
  j["agree_all"] = r.agree_all();
  return j;
}

Json to_json(const IjlRow& row) {
  return Json{{"n", row.n},
              {"ell", row.ell},
              {"i", row.i},
              {"j", row.j},
              {"cmp", to_string(row.cmp)}};
}

Json words_report(const ParamWord& c, std::size_t upto) {
  Json j = report_header("words", c);
  Json words = Json::array();
  const auto u = length_table(c, upto + 1);
  Word w{0};
  for (std::size_t n = 0; n <= upto; ++n) {
    if (n > 0) w = apply_morphism(c, w);
    words.push_back(Json{{"n", n}, {"u", format_digits(w)}, {"U", to_json(u[n])}});
  }
  j["words"] = std::move(words);
  return j;
}

Json check_report(const ParamWord& c) {
  Json j = report_header("check", c);
  const ConditionReport cond = check_conditions(c);
  j["conditions"] = to_json(cond);
  if (cond.holds()) {
    j["reduction"] = to_json(reduce_parry(c));
    j["minimal_family"] = to_json(minimal_family_check(c));
  } else {
    j["reduction"] = nullptr;
    j["minimal_family"] = nullptr;
  }
  return j;
}

}  // namespace parrysa
