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

#include <span>
#include <vector>

#include "bolkit/perm_group.hpp"
#include "bolkit/table.hpp"

namespace bolkit {

/// Sorted, duplicate-free set of element indices.
using ElementSet = std::vector<Elem>;

ElementSet make_set(std::vector<Elem> elems);
bool set_contains(const ElementSet& s, Elem x);

/// A loop whose product has been checked to be associative.
class FiniteGroup {
 public:
  /// Throws Error(Errc::invalid_group) unless `loop` is associative.
  explicit FiniteGroup(Loop loop);

  const Loop& loop() const noexcept { return loop_; }
  std::size_t order() const noexcept { return loop_.order(); }
  Elem mul(Elem a, Elem b) const noexcept { return loop_.mul(a, b); }
  Elem inv(Elem a) const noexcept { return loop_.inv(a); }

  ElementSet all() const;

  /// Subgroup generated by `gens` (the trivial subgroup when empty).
  ElementSet generated(std::span<const Elem> gens) const;
  bool is_subgroup(const ElementSet& s) const;
  bool is_normal_subgroup(const ElementSet& s) const;

  /// Right regular image R_g : x -> xg.
  Perm regular(Elem g) const;
  PermGroup regular_image(const ElementSet& subgroup) const;
  /// Inverse of regular_image: R_g is identified with 0^{R_g} = g.
  static ElementSet from_regular(const PermGroup& h);

  std::vector<ElementSet> normal_subgroups() const;

 private:
  Loop loop_;
};

}  // namespace bolkit
