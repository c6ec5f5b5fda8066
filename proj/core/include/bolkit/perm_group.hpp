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
#include <optional>
#include <span>
#include <vector>

#include "bolkit/perm.hpp"

namespace bolkit {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A permutation group held as a generator list plus its fully enumerated,
/// sorted element set. Every group here is small enough to list; the
/// closure cap turns anything larger into an explicit error.
class PermGroup {
 public:
  /// Breadth-first product closure. Throws CapExceededError when the
  /// element count passes `cap`, Errc::degree_mismatch on mixed degrees.
  static PermGroup closure(std::span<const Perm> gens,
                           std::size_t cap = kDefaultClosureCap);

  static PermGroup trivial(std::size_t degree);

  /// Wraps an element set known to be a subgroup, choosing generators
  /// greedily in element order. Throws Error(Errc::not_subgroup) if the
  /// set is not closed.
  static PermGroup from_elements(std::vector<Perm> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& generators() const noexcept { return gens_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }

  bool contains(const Perm& p) const;
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& g) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  PermGroup(std::size_t degree, std::vector<Perm> gens,
            std::vector<Perm> elements)
      : degree_(degree),
        gens_(std::move(gens)),
        elements_(std::move(elements)) {}

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
};

std::vector<Point> orbit(const PermGroup& g, Point p);
bool is_transitive(const PermGroup& g);

/// Elements fixing `p`.
PermGroup stabilizer(const PermGroup& g, Point p);

PermGroup intersection(const PermGroup& a, const PermGroup& b);

/// g^{-1} h g in H for every generator pair. Throws Errc::not_subgroup
/// unless H is inside G.
bool is_normal(const PermGroup& g, const PermGroup& h);

/// Smallest normal subgroup of G containing `seed`.
PermGroup normal_closure(const PermGroup& g, std::span<const Perm> seed);

/// Intersection of all conjugates of H: the largest normal subgroup of G
/// contained in H.
PermGroup core(const PermGroup& g, const PermGroup& h);

/// Conjugacy classes, each sorted, ordered by their minimal element.
std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g);

/// True iff |G| > 1 and every non-identity element has G as its normal
/// closure.
bool is_simple_group(const PermGroup& g);

/// All normal subgroups, ordered by (order, elements).
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

struct Coset {
  Perm representative;  // minimal element
  std::vector<Perm> elements;
};

/// Partition of G into right cosets Hg, ordered by representative.
std::vector<Coset> right_cosets(const PermGroup& g, const PermGroup& h);

}  // namespace bolkit
