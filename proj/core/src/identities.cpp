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
#include "bolkit/identities.hpp"

#include <cstdlib>

namespace bolkit {

std::string_view law_name(Law law) {
  switch (law) {
    case Law::right_bol: return "right_bol";
    case Law::moufang: return "moufang";
    case Law::associative: return "associative";
  }
  return "unknown";
}

Sides evaluate(Law law, const Magma& m, Elem x, Elem y, Elem z) {
  switch (law) {
    case Law::right_bol:
      return {m(m(m(x, y), z), y), m(x, m(m(y, z), y))};
    case Law::moufang:
      return {m(y, m(z, m(y, x))), m(m(y, m(z, y)), x)};
    case Law::associative:
      return {m(m(x, y), z), m(x, m(y, z))};
  }
  std::abort();
}

bool reproduces(Law law, const Magma& m, const Triple& t) {
  const std::size_t n = m.order();
  if (t.x >= n || t.y >= n || t.z >= n) return false;
  const auto s = evaluate(law, m, t.x, t.y, t.z);
  return s.lhs == t.lhs && s.rhs == t.rhs && s.lhs != s.rhs;
}

IdentityWitness check_law_naive(Law law, const Magma& m) {
  const auto n = static_cast<Elem>(m.order());
  for (Elem z = 0; z < n; ++z) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem x = 0; x < n; ++x) {
        const auto s = evaluate(law, m, x, y, z);
        if (s.lhs != s.rhs) {
          return {false, Triple{x, y, z, s.lhs, s.rhs}};
        }
      }
    }
  }
  return {};
}

namespace {

// Right translations as contiguous image arrays: rights[y*n + x] = xy.
// Left translations are the rows of the table and need no copy.
struct Translations {
  std::size_t n;
  std::vector<Elem> rights;

  explicit Translations(const Magma& m) : n(m.order()), rights(n * n) {
    for (Elem x = 0; x < n; ++x) {
      auto r = m.row(x);
      for (Elem y = 0; y < n; ++y) rights[y * n + x] = r[y];
    }
  }

  const Elem* right(Elem y) const { return rights.data() + y * n; }
};

}  // namespace

IdentityWitness check_law(Law law, const Magma& m) {
  const auto n = static_cast<Elem>(m.order());
  std::optional<Translations> tr;
  if (law != Law::moufang) tr.emplace(m);

  for (Elem z = 0; z < n; ++z) {
    for (Elem y = 0; y < n; ++y) {
      const Elem* a = nullptr;
      const Elem* b = nullptr;
      const Elem* c = nullptr;
      const Elem* rhs = nullptr;
      switch (law) {
        case Law::right_bol:
          a = tr->right(y);
          b = tr->right(z);
          c = a;
          rhs = tr->right(m(m(y, z), y));
          break;
        case Law::moufang:
          a = m.row(y).data();
          b = m.row(z).data();
          c = a;
          rhs = m.row(m(y, m(z, y))).data();
          break;
        case Law::associative:
          a = tr->right(y);
          b = tr->right(z);
          rhs = tr->right(m(y, z));
          break;
      }
      for (Elem x = 0; x < n; ++x) {
        Elem lhs = b[a[x]];
        if (c != nullptr) lhs = c[lhs];
        if (lhs != rhs[x]) return {false, Triple{x, y, z, lhs, rhs[x]}};
      }
    }
  }
  return {};
}

bool is_commutative(const Magma& m) {
  const auto n = static_cast<Elem>(m.order());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (m(x, y) != m(y, x)) return false;
    }
  }
  return true;
}

InverseProperties inverse_properties(const Loop& l) {
  const auto n = static_cast<Elem>(l.order());
  InverseProperties ip{true, true};
  for (Elem x = 0; x < n; ++x) {
    const Elem xi = l.inv(x);
    for (Elem y = 0; y < n; ++y) {
      if (ip.right_ip && l.mul(l.mul(y, x), xi) != y) ip.right_ip = false;
      if (ip.left_ip && l.mul(x, l.mul(xi, y)) != y) ip.left_ip = false;
    }
  }
  return ip;
}

Elem power(const Loop& l, Elem x, long long k) {
  const unsigned long long steps =
      k < 0 ? 0ULL - static_cast<unsigned long long>(k)
            : static_cast<unsigned long long>(k);
  Elem acc = 0;
  for (unsigned long long i = 0; i < steps; ++i) acc = l.mul(acc, x);
  return k < 0 ? l.inv(acc) : acc;
}

std::size_t element_order(const Loop& l, Elem x) {
  Elem acc = x;
  std::size_t k = 1;
  while (acc != 0) {
    acc = l.mul(acc, x);
    ++k;
    if (k > l.order()) return 0;  // not power-periodic through the unit
  }
  return k;
}

ClassificationReport identify(const RawTable& raw, std::size_t max_order) {
  ClassificationReport rep;
  rep.order = raw.size();
  std::optional<Magma> magma;
  try {
    magma = Magma::from_rows(raw, max_order);
  } catch (const Error& e) {
    rep.table_error = e.what();
    return rep;
  }
  rep.associative = is_associative(*magma);
  rep.right_bol = is_right_bol(*magma);
  rep.moufang = is_moufang(*magma);
  rep.commutative = is_commutative(*magma);
  try {
    CayleyTable table(*magma);
    rep.quasigroup = true;
    rep.identity = find_identity(table);
    if (rep.identity) {
      rep.loop = true;
      rep.inverse = inverse_properties(validate_loop(table));
    }
  } catch (const Error& e) {
    rep.quasigroup_error = e.what();
  }
  return rep;
}

}  // namespace bolkit
