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

#ifndef PARRYSA_TYPES_HPP_
#define PARRYSA_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parrysa {

/// Letters of the fixed point and digits of representations share one
/// integer type. Letters are always < k; digits are bounded by max c_i.
using Letter = std::uint32_t;

/// A finite word over the integers. Letters are values, never characters.
using Word = std::vector<Letter>;

/// Exact arithmetic for U_n and everything derived from it.
using BigInt = boost::multiprecision::cpp_int;

enum class ErrorCode {
  kInvalidArgument,  // malformed input, parse failures
  kDomain,           // value outside the operation's domain
  kPrecondition,     // operation requires a property the input lacks
  kCapReached,       // bounded search hit its cap; no value produced
  kInternal,         // a proven identity failed: implementation bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace parrysa

#endif  // PARRYSA_TYPES_HPP_
