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
#include "bolkit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bolkit/error.hpp"
#include "bolkit/perm.hpp"

namespace bolkit {

namespace {

Loop as_loop(CayleyTable t) { return validate_loop(t); }

CayleyTable cyclic(std::size_t n) {
  std::vector<Elem> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      cells[x * n + y] = static_cast<Elem>((x + y) % n);
    }
  }
  return CayleyTable(Magma::from_cells(n, std::move(cells)));
}

// Elements 1,-1,i,-i,j,-j,k,-k; index 2u + (negative ? 1 : 0).
CayleyTable quaternion() {
  // unit product u*v = sign * w for units 1,i,j,k
  constexpr int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  constexpr bool kNeg[4][4] = {{false, false, false, false},
                               {false, true, false, true},
                               {false, true, true, false},
                               {false, false, true, true}};
  std::vector<Elem> cells(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int u = a / 2;
      const int v = b / 2;
      const bool neg = kNeg[u][v] != (((a % 2) + (b % 2)) % 2 == 1);
      cells[a * 8 + b] = static_cast<Elem>(2 * kUnit[u][v] + (neg ? 1 : 0));
    }
  }
  return CayleyTable(Magma::from_cells(8, std::move(cells)));
}

std::vector<Perm> symmetric_gens(std::size_t n) {
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
  return {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {cycle})};
}

std::vector<Perm> alternating_gens(std::size_t n) {
  std::vector<Perm> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  return gens;
}

std::vector<Perm> dihedral_gens(std::size_t n) {
  std::vector<Point> rot(n);
  std::vector<Point> ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return {Perm(std::move(rot)), Perm(std::move(ref))};
}

std::size_t parse_size(std::string_view digits, std::string_view name) {
  std::size_t v = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size()) {
    throw Error(Errc::parse, "unknown group name '" + std::string(name) + "'");
  }
  return v;
}

PermGroup perm_group_by_name(std::string_view name) {
  const char kind = name.empty() ? '\0' : name.front();
  const std::size_t n = parse_size(name.substr(1), name);
  std::vector<Perm> gens;
  if (kind == 's' && n >= 2 && n <= 7) {
    gens = symmetric_gens(n);
  } else if (kind == 'a' && n >= 3 && n <= 7) {
    gens = alternating_gens(n);
  } else if (kind == 'd' && n >= 3) {
    gens = dihedral_gens(n);
  } else {
    throw Error(Errc::parse, "unknown group name '" + std::string(name) + "'");
  }
  return PermGroup::closure(gens);
}

CayleyTable single_group(std::string_view name) {
  if (name == "q8") return quaternion();
  if (!name.empty() && name.front() == 'z') {
    const std::size_t n = parse_size(name.substr(1), name);
    if (n == 0 || n > kDefaultMaxOrder) {
      throw Error(Errc::parse, "cyclic order out of range in '" +
                                   std::string(name) + "'");
    }
    return cyclic(n);
  }
  return table_from_perm_group(perm_group_by_name(name));
}

std::vector<Elem> perm_conjugation(const PermGroup& g, const Perm& t) {
  std::vector<Elem> sigma;
  sigma.reserve(g.order());
  for (const Perm& p : g.elements()) {
    const auto idx = g.index_of(conjugate(p, t));
    if (!idx) {
      throw Error(Errc::invalid_involution,
                  "conjugation does not preserve the group");
    }
    sigma.push_back(static_cast<Elem>(*idx));
  }
  return sigma;
}

}  // namespace

CayleyTable table_from_perm_group(const PermGroup& g) {
  const auto& elems = g.elements();
  const std::size_t n = elems.size();
  std::vector<Elem> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cells[i * n + j] = static_cast<Elem>(*g.index_of(elems[i] * elems[j]));
    }
  }
  return CayleyTable(Magma::from_cells(n, std::move(cells)));
}

CayleyTable direct_product(const Magma& a, const Magma& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  if (n > kDefaultMaxOrder) {
    throw Error(Errc::too_large, "direct product of order " +
                                     std::to_string(n) + " is too large");
  }
  std::vector<Elem> cells(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem first = a(x / nb, y / nb);
      const Elem second = b(x % nb, y % nb);
      cells[x * n + y] = static_cast<Elem>(first * nb + second);
    }
  }
  return CayleyTable(Magma::from_cells(n, std::move(cells)));
}

CayleyTable group_table(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::optional<CayleyTable> result;
  std::string_view rest = lower;
  while (true) {
    const auto sep = rest.find('x');
    CayleyTable factor = single_group(rest.substr(0, sep));
    result = result ? direct_product(*result, factor) : std::move(factor);
    if (sep == std::string_view::npos) break;
    rest = rest.substr(sep + 1);
  }
  return *std::move(result);
}

FiniteGroup named_group(std::string_view name) {
  return FiniteGroup(as_loop(group_table(name)));
}

CayleyTable chein_double(const FiniteGroup& g) {
  const auto m = static_cast<Elem>(g.order());
  const std::size_t n = 2 * std::size_t{m};
  if (n > kDefaultMaxOrder) {
    throw Error(Errc::too_large, "double of order " + std::to_string(n) +
                                     " is too large");
  }
  std::vector<Elem> cells(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem a = x % m;
      const Elem b = y % m;
      const bool s = x >= m;
      const bool t = y >= m;
      Elem v = 0;
      if (!s && !t) {
        v = g.mul(a, b);
      } else if (!s && t) {
        v = g.mul(b, a) + m;
      } else if (s && !t) {
        v = g.mul(a, g.inv(b)) + m;
      } else {
        v = g.mul(g.inv(b), a);
      }
      cells[x * n + y] = v;
    }
  }
  return CayleyTable(Magma::from_cells(n, std::move(cells)));
}

GroupWithInvolution negation_involution(std::size_t n) {
  if (n < 3) throw Error(Errc::precondition, "negation needs n >= 3");
  std::vector<Elem> sigma(n);
  for (std::size_t x = 0; x < n; ++x) sigma[x] = static_cast<Elem>((n - x) % n);
  return GroupWithInvolution(FiniteGroup(as_loop(cyclic(n))), std::move(sigma));
}

GroupWithInvolution swap_involution(const FiniteGroup& h) {
  const auto m = static_cast<Elem>(h.order());
  CayleyTable t = direct_product(h.loop().table(), h.loop().table());
  std::vector<Elem> sigma(std::size_t{m} * m);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) sigma[a * m + b] = b * m + a;
  }
  return GroupWithInvolution(FiniteGroup(as_loop(std::move(t))),
                             std::move(sigma));
}

GroupWithInvolution conjugation_involution(
    std::string_view group, const std::vector<std::vector<Point>>& cycles) {
  std::string lower(group);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  const PermGroup g = perm_group_by_name(lower);
  const Perm t = Perm::from_cycles(g.degree(), cycles);
  return GroupWithInvolution(FiniteGroup(as_loop(table_from_perm_group(g))),
                             perm_conjugation(g, t));
}

NamedInstance negation_instance(std::size_t n) {
  if (n % 2 == 0) {
    throw Error(Errc::precondition, "negation instance needs odd n");
  }
  GroupWithInvolution gw = negation_involution(n);
  const std::size_t half = (n + 1) / 2;  // inverse of 2 mod n
  PhiPairs phi;
  for (std::size_t x = 0; x < n; ++x) {
    phi.emplace_back(static_cast<Elem>(x),
                     static_cast<Elem>((n - (x * half) % n) % n));
  }
  return {"z" + std::to_string(n) + "-negation", std::move(gw),
          std::move(phi)};
}

NamedInstance swap_z3_instance() {
  GroupWithInvolution gw = swap_involution(named_group("z3"));
  PhiPairs phi;
  for (Elem h = 0; h < 3; ++h) {
    const Elem neg = (3 - h) % 3;
    phi.emplace_back(h * 3 + neg, neg * 3);  // (h,-h) -> (-h,0)
  }
  return {"z3xz3-swap", std::move(gw), std::move(phi)};
}

NamedInstance swap_projection_instance(std::string_view h) {
  const FiniteGroup base = named_group(h);
  const auto m = static_cast<Elem>(base.order());
  GroupWithInvolution gw = swap_involution(base);
  const ElementSet n = twisted_set(gw).generated;
  PhiPairs phi;
  for (Elem x : n) phi.emplace_back(x, (x % m) * m);  // (a,b) -> (b,e)
  std::string name(h);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return {name + "x" + name + "-swap-proj", std::move(gw), std::move(phi)};
}

std::vector<NamedInstance> standard_instances() {
  std::vector<NamedInstance> out;
  for (std::size_t n : {3, 5, 7, 9, 15}) out.push_back(negation_instance(n));
  for (std::size_t n : {4, 6, 8}) {
    out.push_back({"z" + std::to_string(n) + "-negation",
                   negation_involution(n), std::nullopt});
  }
  out.push_back(swap_z3_instance());
  for (const char* h : {"z2", "z3", "s3", "z4", "q8", "d4"}) {
    out.push_back(swap_projection_instance(h));
  }
  out.push_back({"s3-conj", conjugation_involution("s3", {{0, 1}}),
                 std::nullopt});
  out.push_back({"s4-conj", conjugation_involution("s4", {{0, 1}}),
                 std::nullopt});
  out.push_back({"s4-conj-double", conjugation_involution("s4", {{0, 1}, {2, 3}}),
                 std::nullopt});
  out.push_back({"d4-conj", conjugation_involution("d4", {{1, 3}}),
                 std::nullopt});
  out.push_back({"a5-conj", conjugation_involution("a5", {{0, 1}}),
                 std::nullopt});
  return out;
}

std::vector<NamedLoop> standard_loops() {
  std::vector<NamedLoop> out;
  auto add = [&](std::string name, CayleyTable t) {
    out.push_back({std::move(name), as_loop(std::move(t))});
  };
  for (const char* g : {"z2", "z3", "z4", "z5", "z6", "z7", "z8", "z2xz2",
                        "z2xz4", "z2xz2xz2", "z3xz3", "s3", "q8", "d4", "d5",
                        "a4", "d6", "s4", "a5"}) {
    add(g, group_table(g));
  }
  for (const char* g : {"s3", "d4", "q8", "a4", "d6"}) {
    add(std::string("m") + g, chein_double(named_group(g)));
  }
  add("b8", frozen_b8());
  return out;
}

CayleyTable frozen_b8() {
  static constexpr Elem kRows[8][8] = {
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 3, 0, 1, 6, 7, 4, 5}, {3, 2, 1, 0, 7, 6, 5, 4},
      {4, 5, 6, 7, 0, 1, 3, 2}, {5, 4, 7, 6, 1, 0, 2, 3},
      {6, 7, 4, 5, 2, 3, 1, 0}, {7, 6, 5, 4, 3, 2, 0, 1}};
  std::vector<Elem> cells(&kRows[0][0], &kRows[0][0] + 64);
  return CayleyTable(Magma::from_cells(8, std::move(cells)));
}

}  // namespace bolkit
