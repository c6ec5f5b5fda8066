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
#include "bolkit/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "bolkit/error.hpp"

namespace bolkit {

namespace {

using PermSet = std::unordered_set<Perm, PermHash>;

// BFS closure starting from the identity. When `ambient` is given, an
// element outside it aborts with not_subgroup instead of growing further.
std::vector<Perm> close_under(std::size_t degree, std::span<const Perm> gens,
                              std::size_t cap,
                              const PermGroup* ambient = nullptr) {
  PermSet seen;
  std::vector<Perm> queue;
  queue.push_back(Perm::identity(degree));
  seen.insert(queue.back());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm& g : gens) {
      Perm next = compose(queue[i], g);
      if (seen.contains(next)) continue;
      if (ambient != nullptr && !ambient->contains(next)) {
        throw Error(Errc::not_subgroup, "element set is not closed");
      }
      if (seen.size() >= cap) throw CapExceededError(cap);
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

void require_subgroup(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) {
    throw Error(Errc::not_subgroup, "H is not contained in G");
  }
}

}  // namespace

PermGroup PermGroup::closure(std::span<const Perm> gens, std::size_t cap) {
  if (gens.empty()) {
    throw Error(Errc::degree_mismatch, "closure needs at least one generator");
  }
  const std::size_t degree = gens.front().degree();
  for (const Perm& g : gens) {
    if (g.degree() != degree) {
      throw Error(Errc::degree_mismatch, "generators have mixed degrees");
    }
  }
  auto elements = close_under(degree, gens, cap);
  return PermGroup(degree, {gens.begin(), gens.end()}, std::move(elements));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(degree, {}, {Perm::identity(degree)});
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements) {
  if (elements.empty()) {
    throw Error(Errc::not_subgroup, "a subgroup is never empty");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  const std::size_t degree = elements.front().degree();
  if (!elements.front().is_identity()) {
    throw Error(Errc::not_subgroup, "element set lacks the identity");
  }
  PermGroup target(degree, {}, std::move(elements));

  std::vector<Perm> gens;
  std::vector<Perm> current{Perm::identity(degree)};
  for (const Perm& p : target.elements_) {
    if (std::binary_search(current.begin(), current.end(), p)) continue;
    gens.push_back(p);
    current = close_under(degree, gens, target.order() + 1, &target);
  }
  if (current.size() != target.order()) {
    throw Error(Errc::not_subgroup, "element set is not closed");
  }
  target.gens_ = std::move(gens);
  return target;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_ || order() > g.order()) return false;
  return std::includes(g.elements_.begin(), g.elements_.end(),
                       elements_.begin(), elements_.end());
}

std::vector<Point> orbit(const PermGroup& g, Point p) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{p};
  seen[p] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& s : g.generators()) {
      const Point q = s[out[i]];
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const PermGroup& g) {
  return g.degree() == 0 || orbit(g, 0).size() == g.degree();
}

PermGroup stabilizer(const PermGroup& g, Point p) {
  std::vector<Perm> fixed;
  for (const Perm& e : g.elements()) {
    if (e[p] == p) fixed.push_back(e);
  }
  return PermGroup::from_elements(std::move(fixed));
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return PermGroup::from_elements(std::move(common));
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h);
  for (const Perm& x : g.generators()) {
    for (const Perm& y : h.generators()) {
      if (!h.contains(conjugate(y, x))) return false;
    }
  }
  return true;
}

PermGroup normal_closure(const PermGroup& g, std::span<const Perm> seed) {
  std::vector<Perm> gens;
  for (const Perm& s : seed) {
    if (!g.contains(s)) {
      throw Error(Errc::not_subgroup, "seed element outside the group");
    }
    if (!s.is_identity()) gens.push_back(s);
  }
  if (gens.empty()) return PermGroup::trivial(g.degree());

  PermGroup n = PermGroup::closure(gens);
  bool grown = true;
  while (grown) {
    grown = false;
    for (const Perm& x : g.generators()) {
      for (std::size_t i = 0; i < gens.size() && !grown; ++i) {
        Perm c = conjugate(gens[i], x);
        if (!n.contains(c)) {
          gens.push_back(std::move(c));
          n = PermGroup::closure(gens);
          grown = true;
        }
      }
      if (grown) break;
    }
  }
  return n;
}

PermGroup core(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h);
  std::vector<bool> alive(h.order(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < h.order(); ++i) {
      if (!alive[i]) continue;
      for (const Perm& x : g.generators()) {
        auto j = h.index_of(conjugate(h.elements()[i], x));
        if (!j || !alive[*j]) {
          alive[i] = false;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<Perm> kept;
  for (std::size_t i = 0; i < h.order(); ++i) {
    if (alive[i]) kept.push_back(h.elements()[i]);
  }
  return PermGroup::from_elements(std::move(kept));
}

std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g) {
  const auto& elems = g.elements();
  std::vector<bool> done(elems.size(), false);
  std::vector<std::vector<Perm>> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    std::vector<Perm> cls{elems[i]};
    done[i] = true;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (const Perm& x : g.generators()) {
        Perm c = conjugate(cls[k], x);
        const std::size_t j = *g.index_of(c);
        if (!done[j]) {
          done[j] = true;
          cls.push_back(std::move(c));
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_simple_group(const PermGroup& g) {
  if (g.order() <= 1) return false;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front().is_identity()) continue;
    const Perm& rep = cls.front();
    if (normal_closure(g, std::span(&rep, 1)).order() != g.order()) {
      return false;
    }
  }
  return true;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  std::vector<PermGroup> found{PermGroup::trivial(g.degree())};
  auto add = [&found](PermGroup n) {
    if (std::find(found.begin(), found.end(), n) != found.end()) return false;
    found.push_back(std::move(n));
    return true;
  };
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front().is_identity()) continue;
    add(normal_closure(g, std::span(&cls.front(), 1)));
  }
  // Products of normal subgroups are normal; close the list under joins.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Perm> gens = found[i].generators();
      gens.insert(gens.end(), found[j].generators().begin(),
                  found[j].generators().end());
      if (gens.empty()) continue;
      add(PermGroup::closure(gens));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const PermGroup& a, const PermGroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements() < b.elements();
            });
  return found;
}

std::vector<Coset> right_cosets(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h);
  const auto& elems = g.elements();
  std::vector<bool> assigned(elems.size(), false);
  std::vector<Coset> cosets;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (assigned[i]) continue;
    Coset c{elems[i], {}};
    c.elements.reserve(h.order());
    for (const Perm& x : h.elements()) {
      Perm y = compose(x, elems[i]);
      assigned[*g.index_of(y)] = true;
      c.elements.push_back(std::move(y));
    }
    std::sort(c.elements.begin(), c.elements.end());
    cosets.push_back(std::move(c));
  }
  return cosets;
}

}  // namespace bolkit
