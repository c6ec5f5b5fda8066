// Copyright 2026 The bolkit Authors
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
#include "bolkit/error.hpp"

namespace bolkit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_square: return "NotSquare";
    case Errc::too_large: return "TooLarge";
    case Errc::not_latin: return "NotLatin";
    case Errc::no_identity: return "NoIdentity";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_subgroup: return "NotSubgroup";
    case Errc::invalid_group: return "InvalidGroup";
    case Errc::invalid_involution: return "InvalidInvolution";
    case Errc::axiom_failure: return "AxiomFailure";
    case Errc::ill_defined: return "IllDefined";
    case Errc::uniqueness_violation: return "UniquenessViolation";
    case Errc::condition_failure: return "ConditionFailure";
    case Errc::homomorphism_failure: return "HomomorphismFailure";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case Errc::parse: return "Parse";
    case Errc::precondition: return "Precondition";
  }
  return "Unknown";
}

NotLatinError::NotLatinError(Axis axis, std::size_t index)
    : Error(Errc::not_latin,
            std::string("not a quasigroup: repeated entry in ") +
                (axis == Axis::row ? "row " : "column ") +
                std::to_string(index)),
      axis_(axis),
      index_(index) {}

OutOfRangeError::OutOfRangeError(std::size_t row, std::size_t column,
                                 long long value)
    : Error(Errc::out_of_range, "entry " + std::to_string(value) + " at (" +
                                    std::to_string(row) + "," +
                                    std::to_string(column) +
                                    ") is outside the element range"),
      row_(row),
      column_(column),
      value_(value) {}

CapExceededError::CapExceededError(std::size_t cap)
    : Error(Errc::cap_exceeded,
            "group closure exceeded the cap of " + std::to_string(cap) +
                " elements"),
      cap_(cap) {}

}  // namespace bolkit
