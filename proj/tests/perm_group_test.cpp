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
#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bolkit/perm.hpp"
#include "bolkit/perm_group.hpp"
#include "support.hpp"

namespace bolkit {
namespace {

using testing::error_code;
using testing::Rng;

Perm cycles(std::size_t n, const std::vector<std::vector<Point>>& c) {
  return Perm::from_cycles(n, c);
}

PermGroup sym(std::size_t n) {
  std::vector<Point> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Point>(i);
  const std::vector<Perm> gens{cycles(n, {{0, 1}}), cycles(n, {all})};
  return PermGroup::closure(gens);
}

PermGroup alt(std::size_t n) {
  std::vector<Perm> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(cycles(n, {{0, 1, k}}));
  return PermGroup::closure(gens);
}

Perm random_perm(std::size_t n, Rng& rng) {
  auto img = testing::random_permutation(n, rng);
  return Perm(std::vector<Point>(img.begin(), img.end()));
}

TEST(Perm, ValidatesImages) {
  EXPECT_EQ(error_code([] { Perm({0, 0}); }), Errc::out_of_range);
  EXPECT_EQ(error_code([] { Perm({0, 2}); }), Errc::out_of_range);
  EXPECT_EQ(error_code([] { cycles(3, {{0, 3}}); }), Errc::out_of_range);
  EXPECT_TRUE(Perm::identity(4).is_identity());
}

TEST(Perm, ComposesLeftToRight) {
  const Perm p = cycles(3, {{0, 1}});
  const Perm q = cycles(3, {{1, 2}});
  const Perm pq = p * q;
  for (Point i = 0; i < 3; ++i) EXPECT_EQ(pq[i], q[p[i]]);
  EXPECT_EQ(pq, cycles(3, {{0, 2, 1}}));
  EXPECT_EQ(error_code([&] { compose(p, Perm::identity(4)); }),
            Errc::degree_mismatch);
}

TEST(Perm, InverseAndConjugate) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Perm p = random_perm(6, rng);
    const Perm g = random_perm(6, rng);
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_EQ(conjugate(p, g), g.inverse() * p * g);
  }
}

TEST(Perm, IdentityIsMinimal) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    EXPECT_LE(Perm::identity(5), random_perm(5, rng));
  }
}

TEST(PermGroup, ClosureOrders) {
  EXPECT_EQ(sym(3).order(), 6u);
  EXPECT_EQ(sym(4).order(), 24u);
  EXPECT_EQ(alt(5).order(), 60u);
  EXPECT_EQ(PermGroup::trivial(4).order(), 1u);
  const PermGroup s4 = sym(4);
  EXPECT_TRUE(std::is_sorted(s4.elements().begin(), s4.elements().end()));
  EXPECT_TRUE(s4.elements().front().is_identity());
}

TEST(PermGroup, ClosureErrors) {
  EXPECT_EQ(error_code([] { PermGroup::closure(std::vector<Perm>{}); }),
            Errc::degree_mismatch);
  const std::vector<Perm> mixed{Perm::identity(2), Perm::identity(3)};
  EXPECT_EQ(error_code([&] { PermGroup::closure(mixed); }),
            Errc::degree_mismatch);
  const std::vector<Perm> s5{cycles(5, {{0, 1}}), cycles(5, {{0, 1, 2, 3, 4}})};
  try {
    PermGroup::closure(s5, 100);
    FAIL();
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.cap(), 100u);
  }
}

TEST(PermGroupProperty, ClosureIgnoresGeneratorOrder) {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    std::vector<Perm> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_perm(5, rng));
    const PermGroup g = PermGroup::closure(gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens.front() * gens.back());
    EXPECT_EQ(PermGroup::closure(gens), g);
  }
}

TEST(PermGroupProperty, OrbitStabilizer) {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    std::vector<Perm> gens{random_perm(6, rng)};
    if (t % 2 == 0) gens.push_back(random_perm(6, rng));
    const PermGroup g = PermGroup::closure(gens);
    for (Point p = 0; p < 6; ++p) {
      const PermGroup stab = stabilizer(g, p);
      EXPECT_EQ(orbit(g, p).size() * stab.order(), g.order());
      for (const Perm& s : stab.elements()) EXPECT_EQ(s[p], p);
    }
  }
  EXPECT_TRUE(is_transitive(sym(4)));
  EXPECT_FALSE(is_transitive(PermGroup::closure(std::vector<Perm>{
      cycles(4, {{0, 1}})})));
}

TEST(PermGroup, FromElements) {
  const PermGroup s3 = sym(3);
  EXPECT_EQ(PermGroup::from_elements(s3.elements()), s3);
  std::vector<Perm> not_closed{Perm::identity(3), cycles(3, {{0, 1}}),
                               cycles(3, {{1, 2}})};
  EXPECT_EQ(error_code([&] { PermGroup::from_elements(not_closed); }),
            Errc::not_subgroup);
}

TEST(PermGroup, Normality) {
  const PermGroup s3 = sym(3);
  const PermGroup a3 = alt(3);
  const PermGroup t = PermGroup::closure(std::vector<Perm>{cycles(3, {{0, 1}})});
  EXPECT_TRUE(is_normal(s3, a3));
  EXPECT_FALSE(is_normal(s3, t));
  EXPECT_EQ(core(s3, t).order(), 1u);
  EXPECT_EQ(core(s3, a3), a3);
  const PermGroup s4 = sym(4);
  const PermGroup odd =
      PermGroup::closure(std::vector<Perm>{cycles(4, {{0, 1}})});
  EXPECT_EQ(error_code([&] { is_normal(alt(4), odd); }), Errc::not_subgroup);
  EXPECT_EQ(normal_closure(s4, std::vector<Perm>{cycles(4, {{0, 1}, {2, 3}})})
                .order(),
            4u);
}

// Conjugacy classes by direct conjugation, independent of the library.
std::vector<std::set<Perm>> oracle_classes(const PermGroup& g) {
  std::vector<std::set<Perm>> classes;
  std::set<Perm> seen;
  for (const Perm& x : g.elements()) {
    if (seen.count(x) != 0) continue;
    std::set<Perm> cls;
    for (const Perm& h : g.elements()) cls.insert(h.inverse() * x * h);
    seen.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Every normal subgroup is a union of classes containing the identity and
// closed under products; try every such union.
std::vector<std::set<Perm>> oracle_normal_subgroups(const PermGroup& g) {
  const auto classes = oracle_classes(g);  // classes[0] = {identity}
  std::vector<std::set<Perm>> out;
  const std::size_t k = classes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << (k - 1)); ++mask) {
    std::set<Perm> s = classes[0];
    for (std::size_t i = 1; i < k; ++i) {
      if ((mask >> (i - 1)) & 1) s.insert(classes[i].begin(), classes[i].end());
    }
    if (g.order() % s.size() != 0) continue;
    bool closed = true;
    for (auto a = s.begin(); closed && a != s.end(); ++a) {
      for (const Perm& b : s) {
        if (s.count(*a * b) == 0) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

std::vector<PermGroup> oracle_groups() {
  Rng rng(77);
  std::vector<PermGroup> gs{sym(3), sym(4), alt(4), alt(5), sym(5),
                            PermGroup::closure(std::vector<Perm>{
                                cycles(5, {{0, 1, 2, 3, 4}})}),
                            PermGroup::closure(std::vector<Perm>{
                                cycles(5, {{0, 1, 2, 3, 4}}),
                                cycles(5, {{1, 4}, {2, 3}})})};
  while (gs.size() < 16) {
    const std::vector<Perm> gens{random_perm(6, rng), random_perm(6, rng)};
    const PermGroup g = PermGroup::closure(gens);
    if (g.order() <= 360) gs.push_back(g);
  }
  gs.push_back(alt(6));
  return gs;
}

TEST(PermGroupProperty, SimplicityMatchesSubsetOracle) {
  for (const PermGroup& g : oracle_groups()) {
    const auto normals = oracle_normal_subgroups(g);
    const bool simple = g.order() > 1 && normals.size() == 2;
    EXPECT_EQ(is_simple_group(g), simple) << "order " << g.order();
    const auto lib = normal_subgroups(g);
    std::set<std::set<Perm>> a(normals.begin(), normals.end());
    std::set<std::set<Perm>> b;
    for (const PermGroup& h : lib) {
      b.insert(std::set<Perm>(h.elements().begin(), h.elements().end()));
    }
    EXPECT_EQ(a, b) << "order " << g.order();
    EXPECT_EQ(conjugacy_classes(g).size(), oracle_classes(g).size());
  }
  EXPECT_FALSE(is_simple_group(PermGroup::trivial(3)));
}

TEST(PermGroupProperty, CoreIsLargestNormalSubgroupInside) {
  Rng rng(21);
  const PermGroup s4 = sym(4);
  const PermGroup a5 = alt(5);
  for (const PermGroup* g : {&s4, &a5}) {
    for (int t = 0; t < 10; ++t) {
      const auto& el = g->elements();
      std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
      const std::vector<Perm> gens{el[pick(rng)]};
      const PermGroup h = PermGroup::closure(gens);
      std::set<Perm> meet(h.elements().begin(), h.elements().end());
      for (const Perm& x : g->elements()) {
        std::set<Perm> next;
        for (const Perm& y : meet) {
          if (h.contains(x * y * x.inverse())) next.insert(y);
        }
        meet = std::move(next);
      }
      const PermGroup c = core(*g, h);
      EXPECT_EQ(std::set<Perm>(c.elements().begin(), c.elements().end()), meet);
      EXPECT_TRUE(is_normal(*g, c));
      EXPECT_TRUE(c.is_subgroup_of(h));
    }
  }
}

TEST(PermGroup, RightCosetsPartition) {
  const PermGroup s4 = sym(4);
  const PermGroup h = stabilizer(s4, 0);
  const auto cosets = right_cosets(s4, h);
  ASSERT_EQ(cosets.size(), 4u);
  std::set<Perm> all;
  for (const Coset& c : cosets) {
    EXPECT_EQ(c.elements.size(), h.order());
    EXPECT_EQ(c.representative, *std::min_element(c.elements.begin(), c.elements.end()));
    for (const Perm& x : c.elements) {
      EXPECT_TRUE(h.contains(x * c.representative.inverse()));
      all.insert(x);
    }
  }
  EXPECT_EQ(all.size(), 24u);
  EXPECT_TRUE(std::is_sorted(cosets.begin(), cosets.end(),
                             [](const Coset& a, const Coset& b) {
                               return a.representative < b.representative;
                             }));
}

TEST(PermGroup, Intersection) {
  const PermGroup s4 = sym(4);
  EXPECT_EQ(intersection(stabilizer(s4, 0), stabilizer(s4, 1)).order(), 2u);
  EXPECT_EQ(intersection(s4, alt(4)), alt(4));
}

}  // namespace
}  // namespace bolkit
