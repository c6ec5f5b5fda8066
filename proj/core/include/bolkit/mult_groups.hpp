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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bolkit/group.hpp"
#include "bolkit/perm_group.hpp"
#include "bolkit/table.hpp"

namespace bolkit {

/// rights[x] = R_x : y -> yx, lefts[x] = L_x : y -> xy.
struct TranslationSet {
  std::vector<Perm> rights;
  std::vector<Perm> lefts;
};

TranslationSet translations(const Loop& l);

enum class Side { right, left, full };

std::string_view side_name(Side s);

/// Group generated by the right translations, the left translations, or
/// both.
PermGroup multiplication_group(const Loop& l, Side side,
                               std::size_t cap = kDefaultClosureCap);

struct MultGroupReport {
  Side side;
  PermGroup group;
  PermGroup inner;  // stabilizer of the identity 0
  bool simple = false;
};

MultGroupReport mult_group(const Loop& l, Side side,
                           std::size_t cap = kDefaultClosureCap);

/// <R_x R_y R_{xy}^{-1}> equals the stabilizer of 0 in the right
/// multiplication group, as element sets.
bool inner_generator_check(const Loop& l,
                           std::size_t cap = kDefaultClosureCap);

/// Smallest subloop containing `seed` and 0 that is closed under the
/// product, both divisions, and every inner mapping (the stabilizer of 0 in
/// the full multiplication group).
ElementSet normal_subloop_closure(const Loop& l, std::span<const Elem> seed,
                                  std::size_t cap = kDefaultClosureCap);

/// True iff the loop is nontrivial and every non-identity element has the
/// whole loop as its normal closure.
bool is_simple_loop(const Loop& l, std::size_t cap = kDefaultClosureCap);

/// The right multiplication group is a simple group.
bool is_strongly_simple(const Loop& l, std::size_t cap = kDefaultClosureCap);

/// Value of (strongly simple => simple).
bool strong_implies_simple_check(const Loop& l,
                                 std::size_t cap = kDefaultClosureCap);

enum class StructureCase { simple_group, semidirect, direct };

std::string_view case_label(StructureCase c);

struct StructureEvidence {
  StructureCase kind;
  std::size_t normal_order = 0;        // order of the normal subgroup H
  std::size_t intersection_order = 0;  // |H cap other factor|
  std::size_t product_order = 0;       // |H| * |other factor|
  bool factors_commute = false;
  std::string note;
};

/// Which structure cases of Gr(S) occur for a strongly simple loop: Gr
/// simple; Gr = Gr_l semidirect Gr_r; Gr = Gr_l x H with H normal and
/// isomorphic to Gr_r. Several may be realized at once.
struct StructureReport {
  bool applicable = false;
  std::size_t full_order = 0;
  std::size_t left_order = 0;
  std::size_t right_order = 0;
  bool moufang = false;
  std::vector<StructureEvidence> realized;

  /// "not-applicable", "other", or the most specific realized case
  /// (direct before semidirect before simple-Gr).
  std::string label() const;
};

StructureReport classify_structure(const Loop& l,
                                   std::size_t cap = kDefaultClosureCap);

using BigInt = boost::multiprecision::cpp_int;

/// num/den in lowest terms.
struct Fraction {
  BigInt num = 0;
  BigInt den = 1;

  std::string str() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// (1/2) * sum_{k=1}^{n} n!/(n-k)!, exact. Throws Error(Errc::precondition)
/// for n = 0.
Fraction word_count_bound(std::size_t n);

struct BoundCheck {
  std::size_t loop_order = 0;
  Fraction bound;
  std::size_t right_order = 0;
  /// |Gr_r| <= ceil(bound). For n >= 2 this is the same as |Gr_r| <= bound
  /// because the bound is then at least n!; for n = 1 the bound is 1/2 and
  /// the rounding admits the trivial group.
  bool holds = false;
};

BoundCheck bound_check(const Loop& l, std::size_t cap = kDefaultClosureCap);

struct NamedLoop {
  std::string name;
  Loop loop;
};

struct ScanEntry {
  std::string name;
  std::size_t order = 0;
  bool bol = false;
  bool strongly_simple = false;
  bool moufang = false;
  bool candidate = false;  // strongly simple and not Moufang
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  std::size_t candidates() const;
};

/// Records (strongly simple, Moufang) per loop and flags strongly simple
/// non-Moufang entries. Loops failing the right Bol law are kept with
/// bol = false and never flagged.
ScanReport main_theorem_scan(std::span<const NamedLoop> corpus,
                             std::size_t cap = kDefaultClosureCap);

}  // namespace bolkit
