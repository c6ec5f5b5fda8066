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

#include "bolkit/corpus.hpp"
#include "bolkit/symspace.hpp"
#include "support.hpp"

namespace bolkit {
namespace {

using testing::error_code;
using testing::loop_of;

// x.y = x y^-1 x on a whole group, punctured at the identity.
SymSpace group_space(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  std::vector<Elem> cells(std::size_t{n} * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) cells[x * n + y] = g.mul(g.mul(x, g.inv(y)), x);
  }
  return SymSpace(Magma::from_cells(n, std::move(cells)), Elem{0});
}

TEST(SymSpace, AxiomChecks) {
  EXPECT_TRUE(check_symspace(Magma::from_rows({{0}})).holds);
  const AxiomWitness z3 = check_symspace(loop_of("z3").table());
  ASSERT_FALSE(z3.holds);
  EXPECT_EQ(z3.axiom, SymAxiom::idempotent);
  EXPECT_EQ(z3.counterexample->x, 1u);
  // x.y = x is idempotent but not left symmetric.
  const AxiomWitness left = check_symspace(Magma::from_rows({{0, 0}, {1, 1}}));
  ASSERT_FALSE(left.holds);
  EXPECT_EQ(left.axiom, SymAxiom::left_symmetric);
  EXPECT_EQ(error_code([] {
              SymSpace(Magma::from_rows({{0, 0}, {1, 1}}), std::nullopt);
            }),
            Errc::axiom_failure);
}

TEST(SymSpace, LeftDistributivityFailure) {
  // Idempotent and left symmetric on 3 points but not distributive:
  // 0 swaps 1 and 2, 1 swaps 0 and 2, 2 acts trivially.
  const Magma m = Magma::from_rows({{0, 2, 1}, {2, 1, 0}, {0, 1, 2}});
  const AxiomWitness w = check_symspace(m);
  ASSERT_FALSE(w.holds);
  EXPECT_EQ(w.axiom, SymAxiom::left_distributive);
  const Triple& t = *w.counterexample;
  EXPECT_NE(m(t.x, m(t.y, t.z)), m(m(t.x, t.y), m(t.x, t.z)));
}

TEST(GroupWithInvolution, Validation) {
  const FiniteGroup z5(loop_of("z5"));
  EXPECT_EQ(error_code([&] { GroupWithInvolution(z5, {0, 1, 2, 3, 4}); }),
            Errc::invalid_involution);
  EXPECT_NO_THROW(GroupWithInvolution(z5, {0, 1, 2, 3, 4}, true));
  EXPECT_EQ(error_code([&] { GroupWithInvolution(z5, {0, 2, 4, 1, 3}); }),
            Errc::invalid_involution);  // automorphism of order 4
  EXPECT_EQ(error_code([&] { GroupWithInvolution(z5, {0, 4, 3, 1, 2}); }),
            Errc::invalid_involution);  // not a homomorphism
  EXPECT_EQ(error_code([&] { GroupWithInvolution(z5, {0, 4}); }),
            Errc::invalid_involution);
  EXPECT_TRUE(GroupWithInvolution(z5, {0, 1, 2, 3, 4}, true).trivial());
}

TEST(SymSpace, NegationOnZ5) {
  const GroupWithInvolution gw = negation_involution(5);
  EXPECT_EQ(fixed_subgroup(gw), ElementSet{0});
  const TwistedSet t = twisted_set(gw);
  EXPECT_EQ(t.elements, (ElementSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(t.generated.size(), 5u);
  const SymSpace s = space_on_twisted_set(gw);
  ASSERT_EQ(s.size(), 5u);
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) {
      EXPECT_EQ(s.labels()[s.dot(x, y)], (2 * s.labels()[x] + 5 - s.labels()[y]) % 5);
    }
  }
  EXPECT_EQ(coset_space(gw).size(), 5u);
  EXPECT_TRUE(psi_isomorphism_check(gw).ok);
}

TEST(SymSpace, SwapOnZ3xZ3) {
  const GroupWithInvolution gw = swap_involution(named_group("z3"));
  // (a,b) is 3a+b; the diagonal is {0, 4, 8}.
  EXPECT_EQ(fixed_subgroup(gw), (ElementSet{0, 4, 8}));
  const TwistedSet t = twisted_set(gw);
  EXPECT_EQ(t.elements, (ElementSet{0, 5, 7}));  // (c, -c)
  EXPECT_EQ(t.generated, t.elements);
  EXPECT_EQ(space_on_twisted_set(gw).size(), 3u);
  EXPECT_EQ(coset_space(gw).size(), 3u);
  EXPECT_TRUE(psi_isomorphism_check(gw).ok);
}

TEST(SymSpace, TrivialInvolution) {
  const GroupWithInvolution gw(FiniteGroup(loop_of("s3")),
                               {0, 1, 2, 3, 4, 5}, true);
  EXPECT_EQ(fixed_subgroup(gw).size(), 6u);
  EXPECT_EQ(twisted_set(gw).elements, ElementSet{0});
  EXPECT_EQ(space_on_twisted_set(gw).size(), 1u);
  EXPECT_EQ(coset_space(gw).size(), 1u);
  EXPECT_TRUE(psi_isomorphism_check(gw).ok);
}

TEST(SymSpace, PowersInZ5AreMultiples) {
  const SymSpace s = group_space(FiniteGroup(loop_of("z5")));
  for (Elem x = 0; x < 5; ++x) {
    for (long long k = -7; k <= 7; ++k) {
      const long long expected = ((k * x) % 5 + 5) % 5;
      EXPECT_EQ(space_power(s, x, k), static_cast<Elem>(expected));
    }
  }
  EXPECT_EQ(space_power(s, 3, 0), 0u);
  EXPECT_EQ(space_power(s, 3, -1), s.dot(0, 3));
}

TEST(SymSpace, PowersFollowRecursion) {
  const SymSpace s = group_space(FiniteGroup(loop_of("s3")));
  const Elem e = *s.base();
  for (Elem x = 0; x < s.size(); ++x) {
    for (long long k = 0; k <= 8; ++k) {
      EXPECT_EQ(space_power(s, x, k + 2), s.dot(x, s.dot(e, space_power(s, x, k))));
      EXPECT_EQ(space_power(s, x, -k), s.dot(e, space_power(s, x, k)));
    }
  }
  const SymSpace unpunctured(s.table(), std::nullopt);
  EXPECT_EQ(error_code([&] { space_power(unpunctured, 1, 2); }),
            Errc::precondition);
}

TEST(SymSpace, InversionIsAutomorphism) {
  EXPECT_TRUE(inversion_automorphism_check(SymSpace(Magma::from_rows({{0}}), Elem{0})));
  EXPECT_TRUE(inversion_automorphism_check(group_space(FiniteGroup(loop_of("z5")))));
  EXPECT_TRUE(inversion_automorphism_check(group_space(FiniteGroup(loop_of("s3")))));
}

TEST(SymSpace, HomomorphismValidation) {
  const SymSpace z5 = group_space(FiniteGroup(loop_of("z5")));
  std::vector<Elem> doubling{0, 2, 4, 1, 3};
  EXPECT_TRUE(check_space_homomorphism(z5, z5, doubling).ok);
  std::vector<Elem> shift{1, 2, 3, 4, 0};  // preserves dot, moves the base
  EXPECT_FALSE(check_space_homomorphism(z5, z5, shift).ok);
  const SymSpace free_z5(z5.table(), std::nullopt);
  EXPECT_TRUE(check_space_homomorphism(free_z5, free_z5, shift).ok);
  std::vector<Elem> squash{0, 0, 0, 0, 1};
  EXPECT_FALSE(check_space_homomorphism(z5, z5, squash).ok);
  std::vector<Elem> bad{0, 9, 0, 0, 0};
  EXPECT_FALSE(check_space_homomorphism(z5, z5, bad).ok);
}

TEST(SymSpaceProperty, CanonicalSpacesOnEveryInstance) {
  for (const NamedInstance& inst : standard_instances()) {
    const SymSpace a = space_on_twisted_set(inst.gw);
    const SymSpace b = coset_space(inst.gw);
    EXPECT_TRUE(check_symspace(a.table()).holds) << inst.name;
    EXPECT_TRUE(check_symspace(b.table()).holds) << inst.name;
    EXPECT_TRUE(psi_isomorphism_check(inst.gw).ok) << inst.name;
    EXPECT_TRUE(inversion_automorphism_check(a)) << inst.name;
    EXPECT_TRUE(inversion_automorphism_check(b)) << inst.name;
    EXPECT_EQ(a.size() * fixed_subgroup(inst.gw).size(),
              inst.gw.group().order())
        << inst.name;
  }
}

}  // namespace
}  // namespace bolkit
