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
#include "bolkit/group.hpp"

#include <algorithm>

#include "bolkit/identities.hpp"

namespace bolkit {

ElementSet make_set(std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

bool set_contains(const ElementSet& s, Elem x) {
  return std::binary_search(s.begin(), s.end(), x);
}

FiniteGroup::FiniteGroup(Loop loop) : loop_(std::move(loop)) {
  const auto assoc = is_associative(loop_.table());
  if (!assoc.holds) {
    const auto& t = *assoc.counterexample;
    throw Error(Errc::invalid_group,
                "table is not associative at (" + std::to_string(t.x) + "," +
                    std::to_string(t.y) + "," + std::to_string(t.z) + ")");
  }
}

ElementSet FiniteGroup::all() const {
  ElementSet s(order());
  for (Elem i = 0; i < order(); ++i) s[i] = i;
  return s;
}

ElementSet FiniteGroup::generated(std::span<const Elem> gens) const {
  std::vector<bool> in(order(), false);
  std::vector<Elem> out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem g : gens) {
      const Elem p = mul(out[i], g);
      if (!in[p]) {
        in[p] = true;
        out.push_back(p);
      }
    }
  }
  return make_set(std::move(out));
}

bool FiniteGroup::is_subgroup(const ElementSet& s) const {
  if (s.empty() || s.front() != 0) return false;
  for (Elem a : s) {
    if (a >= order()) return false;
    for (Elem b : s) {
      if (!set_contains(s, mul(a, inv(b)))) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_normal_subgroup(const ElementSet& s) const {
  if (!is_subgroup(s)) return false;
  for (Elem g = 0; g < order(); ++g) {
    for (Elem h : s) {
      if (!set_contains(s, mul(mul(inv(g), h), g))) return false;
    }
  }
  return true;
}

Perm FiniteGroup::regular(Elem g) const {
  std::vector<Point> images(order());
  for (Elem x = 0; x < order(); ++x) images[x] = mul(x, g);
  return Perm(std::move(images));
}

PermGroup FiniteGroup::regular_image(const ElementSet& subgroup) const {
  std::vector<Perm> perms;
  perms.reserve(subgroup.size());
  for (Elem g : subgroup) perms.push_back(regular(g));
  return PermGroup::from_elements(std::move(perms));
}

ElementSet FiniteGroup::from_regular(const PermGroup& h) {
  std::vector<Elem> out;
  out.reserve(h.order());
  for (const Perm& p : h.elements()) out.push_back(p[0]);
  return make_set(std::move(out));
}

std::vector<ElementSet> FiniteGroup::normal_subgroups() const {
  std::vector<ElementSet> out;
  for (const auto& n : bolkit::normal_subgroups(regular_image(all()))) {
    out.push_back(from_regular(n));
  }
  return out;
}

}  // namespace bolkit
