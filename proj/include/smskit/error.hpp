// Copyright 2026 The smskit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace smskit {

enum class Errc {
  type_not_in_classification,
  non_integral_invariant,
  out_of_range,
  not_symmetric,
  side_condition_violated,
  pick_not_in_perp,
  precondition_violated,
  no_valid_addition,
  budget_exceeded,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::type_not_in_classification: return "TypeNotInClassification";
    case Errc::non_integral_invariant: return "NonIntegralInvariant";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::side_condition_violated: return "SideConditionViolated";
    case Errc::pick_not_in_perp: return "PickNotInPerp";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::no_valid_addition: return "NoValidAddition";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

/// Domain error carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace smskit
