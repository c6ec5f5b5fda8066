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
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bolkit/table.hpp"

namespace bolkit {

/// Identities decided over all triples of a magma.
///   right_bol:   ((xy)z)y = x((yz)y)
///   moufang:     y(z(yx)) = (y(zy))x
///   associative: (xy)z = x(yz)
enum class Law { right_bol, moufang, associative };

std::string_view law_name(Law law);

struct Triple {
  Elem x = 0;
  Elem y = 0;
  Elem z = 0;
  Elem lhs = 0;
  Elem rhs = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct IdentityWitness {
  bool holds = true;
  /// First failing triple with z varying slowest, then y, then x;
  /// present iff !holds.
  std::optional<Triple> counterexample;

  friend bool operator==(const IdentityWitness&,
                         const IdentityWitness&) = default;
};

struct Sides {
  Elem lhs;
  Elem rhs;
};

Sides evaluate(Law law, const Magma& m, Elem x, Elem y, Elem z);

/// True when re-evaluating the stored triple reproduces the inequality.
bool reproduces(Law law, const Magma& m, const Triple& t);

/// Plain triple enumeration, z outermost and x innermost. This is the
/// reference the translation-operator checkers are tested against.
IdentityWitness check_law_naive(Law law, const Magma& m);

/// Translation-operator form: right Bol as R_y R_z R_y = R_{(yz)y},
/// Moufang as L_y L_z L_y = L_{y(zy)}, associativity as R_y R_z = R_{yz},
/// compared over all pairs (y,z). Returns the same witness as the naive
/// checker.
IdentityWitness check_law(Law law, const Magma& m);

inline IdentityWitness is_right_bol(const Magma& m) {
  return check_law(Law::right_bol, m);
}
inline IdentityWitness is_moufang(const Magma& m) {
  return check_law(Law::moufang, m);
}
inline IdentityWitness is_associative(const Magma& m) {
  return check_law(Law::associative, m);
}

bool is_commutative(const Magma& m);

struct InverseProperties {
  bool right_ip = false;  // (yx)x^{-1} = y
  bool left_ip = false;   // x(x^{-1}y) = y

  friend bool operator==(const InverseProperties&,
                         const InverseProperties&) = default;
};

InverseProperties inverse_properties(const Loop& l);

/// x^0 = 0, x^{k+1} = x^k x, x^{-k} = inv(x^k).
Elem power(const Loop& l, Elem x, long long k);

/// Smallest k > 0 with x^k = 0.
std::size_t element_order(const Loop& l, Elem x);

struct ClassificationReport {
  std::size_t order = 0;
  std::optional<std::string> table_error;  // shape or range failure
  bool quasigroup = false;
  std::optional<std::string> quasigroup_error;
  bool loop = false;
  std::optional<Elem> identity;  // input label of the unit
  IdentityWitness associative;
  IdentityWitness right_bol;
  IdentityWitness moufang;
  bool commutative = false;
  std::optional<InverseProperties> inverse;

  bool group() const { return loop && associative.holds; }
};

/// Runs every classifier it can; sub-errors land in the report fields.
ClassificationReport identify(const RawTable& raw,
                              std::size_t max_order = kDefaultMaxOrder);

}  // namespace bolkit
