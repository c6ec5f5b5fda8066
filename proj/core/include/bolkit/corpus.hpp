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
#include <utility>
#include <vector>

#include "bolkit/group.hpp"
#include "bolkit/mult_groups.hpp"
#include "bolkit/perm_group.hpp"
#include "bolkit/symspace.hpp"
#include "bolkit/table.hpp"

namespace bolkit {

/// Cayley table of a permutation group on its sorted element list, so the
/// identity is element 0.
CayleyTable table_from_perm_group(const PermGroup& g);

/// (a, b) is indexed a * |B| + b.
CayleyTable direct_product(const Magma& a, const Magma& b);

/// Standard groups by name: Zn (cyclic), Dn (dihedral of order 2n, n >= 3),
/// Sn, An (n <= 7), Q8, and products such as "Z3xZ3". Names are case
/// insensitive. Throws Error(Errc::parse) for an unknown name.
CayleyTable group_table(std::string_view name);
FiniteGroup named_group(std::string_view name);

/// The Moufang loop on G x {0,1} with (g,s) indexed g + s|G|:
///   (g,0)(h,0) = (gh,0)        (g,0)(h,1) = (hg,1)
///   (g,1)(h,0) = (gh^-1,1)     (g,1)(h,1) = (h^-1 g,0)
CayleyTable chein_double(const FiniteGroup& g);

/// x -> -x on Z_n. Needs n >= 3.
GroupWithInvolution negation_involution(std::size_t n);

/// (a, b) -> (b, a) on H x H.
GroupWithInvolution swap_involution(const FiniteGroup& h);

/// x -> t x t on the named symmetric or alternating group, t an involution
/// of S_n given by its cycles.
GroupWithInvolution conjugation_involution(
    std::string_view group, const std::vector<std::vector<Point>>& cycles);

using PhiPairs = std::vector<std::pair<Elem, Elem>>;

struct NamedInstance {
  std::string name;
  GroupWithInvolution gw;
  std::optional<PhiPairs> phi;  // present for (sigma, phi) instances
};

/// Z_n with negation and phi(x) = -x/2, n odd.
NamedInstance negation_instance(std::size_t n);

/// Z3 x Z3 with swap and phi((h,-h)) = (-h,0).
NamedInstance swap_z3_instance();

/// H x H with swap and phi((a,b)) = (b,e), defined on all of H x H.
NamedInstance swap_projection_instance(std::string_view h);

/// Every bundled group with involution (orders up to 64), phi attached
/// where one is known.
std::vector<NamedInstance> standard_instances();

/// Groups, Chein doubles up to order 24 and the frozen order-8 Bol loop.
std::vector<NamedLoop> standard_loops();

/// The first order-8 table in search order that is right Bol and not
/// Moufang, as stored in data/corpus/b8.tbl.
CayleyTable frozen_b8();

}  // namespace bolkit
