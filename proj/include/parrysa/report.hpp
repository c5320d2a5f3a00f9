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

// Machine-readable reports. Every top-level document carries
// "schema": 1; exact integers are encoded as decimal strings.

#ifndef PARRYSA_REPORT_HPP_
#define PARRYSA_REPORT_HPP_

#include <cstdint>
#include <string>

#include "json.hpp"
#include "parrysa/attractors.hpp"
#include "parrysa/numeration.hpp"
#include "parrysa/words.hpp"

namespace parrysa {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"schema": 1, "command": command, "c": "<digits>"}
Json report_header(const std::string& command, const ParamWord& c);

Json to_json(const BigInt& v);
Json to_json(const ConditionReport& r);
Json to_json(const ParryReduction& r);
Json to_json(const Attractor& a, bool zero_based);
Json to_json(const PrefixAttractor& a, bool zero_based);
Json to_json(const Profile& p, bool zero_based);
Json to_json(const MinimalFamilyReport& r);
Json to_json(const ConjectureReport& r);
Json to_json(const IjlRow& row);

/// u_0..u_upto with U-table.
Json words_report(const ParamWord& c, std::size_t upto);

/// Conditions, plus reduction and minimal-family data when they hold.
Json check_report(const ParamWord& c);

}  // namespace parrysa

#endif  // PARRYSA_REPORT_HPP_
