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
#include "bolkit/mult_groups.hpp"

#include <algorithm>

#include "bolkit/error.hpp"
#include "bolkit/identities.hpp"

namespace bolkit {

TranslationSet translations(const Loop& l) {
  const auto n = static_cast<Elem>(l.order());
  TranslationSet t;
  t.rights.reserve(n);
  t.lefts.reserve(n);
  for (Elem x = 0; x < n; ++x) {
    std::vector<Point> r(n);
    std::vector<Point> lft(n);
    for (Elem y = 0; y < n; ++y) {
      r[y] = l.mul(y, x);
      lft[y] = l.mul(x, y);
    }
    t.rights.emplace_back(std::move(r));
    t.lefts.emplace_back(std::move(lft));
  }
  return t;
}

std::string_view side_name(Side s) {
  switch (s) {
    case Side::right: return "right";
    case Side::left: return "left";
    case Side::full: return "full";
  }
  return "unknown";
}

PermGroup multiplication_group(const Loop& l, Side side, std::size_t cap) {
  auto t = translations(l);
  std::vector<Perm> gens;
  if (side != Side::left) gens = t.rights;
  if (side != Side::right) {
    gens.insert(gens.end(), t.lefts.begin(), t.lefts.end());
  }
  return PermGroup::closure(gens, cap);
}

MultGroupReport mult_group(const Loop& l, Side side, std::size_t cap) {
  PermGroup g = multiplication_group(l, side, cap);
  PermGroup inner = stabilizer(g, 0);
  const bool simple = is_simple_group(g);
  return {side, std::move(g), std::move(inner), simple};
}

bool inner_generator_check(const Loop& l, std::size_t cap) {
  const auto n = static_cast<Elem>(l.order());
  const auto t = translations(l);
  const PermGroup gr = PermGroup::closure(t.rights, cap);
  const PermGroup inner = stabilizer(gr, 0);

  std::vector<Perm> gens;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Perm p = t.rights[x] * t.rights[y] * t.rights[l.mul(x, y)].inverse();
      if (!p.is_identity()) gens.push_back(std::move(p));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const PermGroup generated = gens.empty() ? PermGroup::trivial(n)
                                           : PermGroup::closure(gens, cap);
  return generated == inner;
}

namespace {

// Everything the normal-subloop closure needs, computed once per loop.
class SubloopCloser {
 public:
  SubloopCloser(const Loop& l, std::size_t cap)
      : loop_(l), n_(l.order()), ldiv_(n_ * n_), rdiv_(n_ * n_) {
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y = 0; y < n_; ++y) {
        const Elem p = l.mul(x, y);
        ldiv_[x * n_ + p] = y;  // x \ p = y
        rdiv_[p * n_ + y] = x;  // p / y = x
      }
    }
    inner_ = stabilizer(multiplication_group(l, Side::full, cap), 0)
                 .generators();
  }

  ElementSet close(std::span<const Elem> seed) const {
    std::vector<bool> in(n_, false);
    std::vector<Elem> members;
    auto add = [&](Elem v) {
      if (!in[v]) {
        in[v] = true;
        members.push_back(v);
      }
    };
    add(0);
    for (Elem s : seed) {
      if (s >= n_) throw Error(Errc::out_of_range, "seed outside the loop");
      add(s);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Elem a = members[i];
      for (const Perm& g : inner_) add(g[a]);
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem b = members[j];
        add(loop_.mul(a, b));
        add(loop_.mul(b, a));
        add(ldiv_[a * n_ + b]);
        add(ldiv_[b * n_ + a]);
        add(rdiv_[a * n_ + b]);
        add(rdiv_[b * n_ + a]);
      }
    }
    return make_set(std::move(members));
  }

 private:
  const Loop& loop_;
  std::size_t n_;
  std::vector<Elem> ldiv_;
  std::vector<Elem> rdiv_;
  std::vector<Perm> inner_;
};

}  // namespace

ElementSet normal_subloop_closure(const Loop& l, std::span<const Elem> seed,
                                  std::size_t cap) {
  return SubloopCloser(l, cap).close(seed);
}

bool is_simple_loop(const Loop& l, std::size_t cap) {
  const auto n = static_cast<Elem>(l.order());
  if (n <= 1) return false;
  const SubloopCloser closer(l, cap);
  for (Elem x = 1; x < n; ++x) {
    if (closer.close(std::span(&x, 1)).size() != n) return false;
  }
  return true;
}

bool is_strongly_simple(const Loop& l, std::size_t cap) {
  return is_simple_group(multiplication_group(l, Side::right, cap));
}

bool strong_implies_simple_check(const Loop& l, std::size_t cap) {
  return !is_strongly_simple(l, cap) || is_simple_loop(l, cap);
}

std::string_view case_label(StructureCase c) {
  switch (c) {
    case StructureCase::simple_group: return "simple-Gr";
    case StructureCase::semidirect: return "semidirect";
    case StructureCase::direct: return "direct";
  }
  return "other";
}

std::string StructureReport::label() const {
  if (!applicable) return "not-applicable";
  for (auto kind : {StructureCase::direct, StructureCase::semidirect,
                    StructureCase::simple_group}) {
    for (const auto& e : realized) {
      if (e.kind == kind) return std::string(case_label(kind));
    }
  }
  return "other";
}

namespace {

bool generators_commute(const PermGroup& a, const PermGroup& b) {
  for (const Perm& x : a.generators()) {
    for (const Perm& y : b.generators()) {
      if (x * y != y * x) return false;
    }
  }
  return true;
}

}  // namespace

StructureReport classify_structure(const Loop& l, std::size_t cap) {
  StructureReport rep;
  const PermGroup right = multiplication_group(l, Side::right, cap);
  rep.right_order = right.order();
  if (!is_simple_group(right)) return rep;
  rep.applicable = true;

  const PermGroup left = multiplication_group(l, Side::left, cap);
  const PermGroup full = multiplication_group(l, Side::full, cap);
  rep.left_order = left.order();
  rep.full_order = full.order();
  rep.moufang = is_moufang(l.table()).holds;

  if (is_simple_group(full)) {
    rep.realized.push_back({StructureCase::simple_group, full.order(), 0,
                            full.order(), false,
                            rep.moufang ? "loop is Moufang"
                                        : "loop is not Moufang"});
  }

  const bool left_normal = is_normal(full, left);
  const PermGroup left_right = intersection(left, right);
  if (left_normal && left_right.order() == 1 &&
      left.order() * right.order() == full.order()) {
    rep.realized.push_back({StructureCase::semidirect, left.order(), 1,
                            left.order() * right.order(),
                            generators_commute(left, right),
                            "Gr_l normal with complement Gr_r"});
  }

  if (left_normal) {
    for (const PermGroup& h : normal_subgroups(full)) {
      if (h.order() != right.order() || h.order() == full.order()) continue;
      const PermGroup meet = intersection(left, h);
      if (meet.order() != 1 || left.order() * h.order() != full.order()) {
        continue;
      }
      if (!generators_commute(left, h)) continue;
      // H is isomorphic to Gr/Gr_l, which is isomorphic to Gr_r exactly when
      // Gr_l and Gr_r meet trivially (Gr = Gr_l Gr_r).
      std::string note;
      if (h == right) {
        note = "H = Gr_r";
      } else if (left_right.order() == 1) {
        note = "H ~ Gr/Gr_l ~ Gr_r";
      } else {
        continue;
      }
      rep.realized.push_back({StructureCase::direct, h.order(), meet.order(),
                              left.order() * h.order(), true,
                              std::move(note)});
    }
  }
  return rep;
}

std::string Fraction::str() const {
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Fraction word_count_bound(std::size_t n) {
  if (n == 0) throw Error(Errc::precondition, "the bound needs n >= 1");
  BigInt sum = 0;
  BigInt term = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    term *= n - k + 1;  // n!/(n-k)!
    sum += term;
  }
  if (sum % 2 == 0) return {sum / 2, 1};
  return {sum, 2};
}

BoundCheck bound_check(const Loop& l, std::size_t cap) {
  BoundCheck c;
  c.loop_order = l.order();
  c.bound = word_count_bound(l.order());
  c.right_order = multiplication_group(l, Side::right, cap).order();
  const BigInt ceiling = (c.bound.num + c.bound.den - 1) / c.bound.den;
  c.holds = BigInt(c.right_order) <= ceiling;
  return c;
}

std::size_t ScanReport::candidates() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [](const ScanEntry& e) { return e.candidate; }));
}

ScanReport main_theorem_scan(std::span<const NamedLoop> corpus,
                             std::size_t cap) {
  ScanReport rep;
  for (const auto& [name, loop] : corpus) {
    ScanEntry e;
    e.name = name;
    e.order = loop.order();
    e.bol = is_right_bol(loop.table()).holds;
    if (e.bol) {
      e.moufang = is_moufang(loop.table()).holds;
      e.strongly_simple = is_strongly_simple(loop, cap);
      e.candidate = e.strongly_simple && !e.moufang;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace bolkit
