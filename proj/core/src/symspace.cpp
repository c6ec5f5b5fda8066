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
#include "bolkit/symspace.hpp"

#include <algorithm>
#include <string>

namespace bolkit {

std::string_view axiom_name(SymAxiom a) {
  switch (a) {
    case SymAxiom::idempotent: return "idempotent";
    case SymAxiom::left_symmetric: return "left_symmetric";
    case SymAxiom::left_distributive: return "left_distributive";
  }
  return "unknown";
}

AxiomWitness check_symspace(const Magma& d) {
  const auto n = static_cast<Elem>(d.order());
  for (Elem x = 0; x < n; ++x) {
    if (d(x, x) != x) {
      return {false, SymAxiom::idempotent, Triple{x, x, x, d(x, x), x}};
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem lhs = d(x, d(x, y));
      if (lhs != y) {
        return {false, SymAxiom::left_symmetric, Triple{x, y, y, lhs, y}};
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        const Elem lhs = d(x, d(y, z));
        const Elem rhs = d(d(x, y), d(x, z));
        if (lhs != rhs) {
          return {false, SymAxiom::left_distributive,
                  Triple{x, y, z, lhs, rhs}};
        }
      }
    }
  }
  return {};
}

SymSpace::SymSpace(Magma dot, std::optional<Elem> base,
                   std::vector<Elem> labels)
    : dot_(std::move(dot)), base_(base), labels_(std::move(labels)) {
  if (base_ && *base_ >= dot_.order()) {
    throw Error(Errc::out_of_range, "base point outside the carrier");
  }
  if (!labels_.empty() && labels_.size() != dot_.order()) {
    throw Error(Errc::out_of_range, "label count does not match carrier");
  }
  const auto w = check_symspace(dot_);
  if (!w.holds) {
    const auto& t = *w.counterexample;
    throw Error(Errc::axiom_failure,
                std::string("symmetric space axiom ") +
                    std::string(axiom_name(*w.axiom)) + " fails at (" +
                    std::to_string(t.x) + "," + std::to_string(t.y) + "," +
                    std::to_string(t.z) + ")");
  }
}

GroupWithInvolution::GroupWithInvolution(FiniteGroup group,
                                         std::vector<Elem> sigma,
                                         bool allow_trivial)
    : group_(std::move(group)), sigma_(std::move(sigma)) {
  const auto n = static_cast<Elem>(group_.order());
  if (sigma_.size() != n) {
    throw Error(Errc::invalid_involution, "sigma must map every element");
  }
  trivial_ = true;
  for (Elem x = 0; x < n; ++x) {
    if (sigma_[x] >= n) {
      throw Error(Errc::invalid_involution, "sigma image out of range");
    }
    if (sigma_[sigma_[x]] != x) {
      throw Error(Errc::invalid_involution,
                  "sigma is not an involution at " + std::to_string(x));
    }
    if (sigma_[x] != x) trivial_ = false;
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (sigma_[group_.mul(x, y)] != group_.mul(sigma_[x], sigma_[y])) {
        throw Error(Errc::invalid_involution,
                    "sigma is not a homomorphism at (" + std::to_string(x) +
                        "," + std::to_string(y) + ")");
      }
    }
  }
  if (trivial_ && !allow_trivial) {
    throw Error(Errc::invalid_involution,
                "sigma is the identity and was not flagged trivial");
  }
}

ElementSet fixed_subgroup(const GroupWithInvolution& gw) {
  ElementSet out;
  for (Elem x = 0; x < gw.group().order(); ++x) {
    if (gw.sigma(x) == x) out.push_back(x);
  }
  if (!gw.group().is_subgroup(out)) {
    throw Error(Errc::axiom_failure, "fixed points do not form a subgroup");
  }
  return out;
}

namespace {

Elem twist(const GroupWithInvolution& gw, Elem x) {
  return gw.group().mul(gw.group().inv(x), gw.sigma(x));
}

// coset_of[g] = index of the right coset I g, cosets numbered by minimal
// representative; reps[k] is that representative.
struct CosetPartition {
  std::vector<Elem> coset_of;
  std::vector<Elem> reps;
  std::vector<std::vector<Elem>> members;
};

CosetPartition right_cosets_of(const FiniteGroup& g, const ElementSet& sub) {
  const auto n = static_cast<Elem>(g.order());
  constexpr Elem kUnset = ~Elem{0};
  CosetPartition p{std::vector<Elem>(n, kUnset), {}, {}};
  for (Elem x = 0; x < n; ++x) {
    if (p.coset_of[x] != kUnset) continue;
    const auto k = static_cast<Elem>(p.reps.size());
    p.reps.push_back(x);
    p.members.emplace_back();
    for (Elem i : sub) {
      const Elem y = g.mul(i, x);
      p.coset_of[y] = k;
      p.members.back().push_back(y);
    }
    std::sort(p.members.back().begin(), p.members.back().end());
  }
  return p;
}

std::size_t index_in(const ElementSet& s, Elem x) {
  return static_cast<std::size_t>(
      std::lower_bound(s.begin(), s.end(), x) - s.begin());
}

}  // namespace

TwistedSet twisted_set(const GroupWithInvolution& gw) {
  std::vector<Elem> elems;
  for (Elem x = 0; x < gw.group().order(); ++x) elems.push_back(twist(gw, x));
  TwistedSet t;
  t.elements = make_set(std::move(elems));
  t.generated = gw.group().generated(t.elements);
  return t;
}

SymSpace space_on_twisted_set(const GroupWithInvolution& gw) {
  const auto& g = gw.group();
  const ElementSet carrier = twisted_set(gw).elements;
  const std::size_t k = carrier.size();
  std::vector<Elem> cells(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Elem x = carrier[i];
      const Elem v = g.mul(g.mul(x, g.inv(carrier[j])), x);
      if (!set_contains(carrier, v)) {
        throw Error(Errc::axiom_failure,
                    "x y^-1 x left the twisted set at element " +
                        std::to_string(v));
      }
      cells[i * k + j] = static_cast<Elem>(index_in(carrier, v));
    }
  }
  // The identity is 1^{-1} sigma(1) and is always the smallest index.
  return SymSpace(Magma::from_cells(k, std::move(cells)), Elem{0}, carrier);
}

SymSpace coset_space(const GroupWithInvolution& gw) {
  const auto& g = gw.group();
  const auto part = right_cosets_of(g, fixed_subgroup(gw));
  const std::size_t k = part.reps.size();
  std::vector<Elem> cells(k * k);
  auto product = [&](Elem x, Elem y) {
    return part.coset_of[g.mul(g.mul(gw.sigma(y), g.inv(gw.sigma(x))), x)];
  };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const Elem value = product(part.reps[a], part.reps[b]);
      for (Elem x : part.members[a]) {
        for (Elem y : part.members[b]) {
          if (product(x, y) != value) {
            throw Error(Errc::ill_defined,
                        "coset product depends on representatives (" +
                            std::to_string(x) + "," + std::to_string(y) +
                            ")");
          }
        }
      }
      cells[a * k + b] = value;
    }
  }
  return SymSpace(Magma::from_cells(k, std::move(cells)), Elem{0},
                  part.reps);
}

PsiVerdict psi_isomorphism_check(const GroupWithInvolution& gw) {
  const auto& g = gw.group();
  const auto part = right_cosets_of(g, fixed_subgroup(gw));
  const ElementSet target = twisted_set(gw).elements;

  std::vector<Elem> psi(part.reps.size());
  for (std::size_t k = 0; k < part.reps.size(); ++k) {
    psi[k] = twist(gw, part.reps[k]);
    for (Elem x : part.members[k]) {
      if (twist(gw, x) != psi[k]) {
        return {false, "psi is not constant on the coset of " +
                           std::to_string(part.reps[k])};
      }
    }
  }
  if (make_set(psi) != target || psi.size() != target.size()) {
    return {false, "psi is not a bijection onto the twisted set"};
  }
  for (std::size_t a = 0; a < part.reps.size(); ++a) {
    for (std::size_t b = 0; b < part.reps.size(); ++b) {
      const Elem x = part.reps[a];
      const Elem y = part.reps[b];
      const Elem prod = part.coset_of[g.mul(
          g.mul(gw.sigma(y), g.inv(gw.sigma(x))), x)];
      const Elem lhs = psi[prod];
      const Elem rhs = g.mul(g.mul(psi[a], g.inv(psi[b])), psi[a]);
      if (lhs != rhs) {
        return {false, "psi does not preserve the product at cosets (" +
                           std::to_string(x) + "," + std::to_string(y) +
                           ")"};
      }
    }
  }
  return {};
}

Elem space_power(const SymSpace& s, Elem x, long long k) {
  if (!s.base()) {
    throw Error(Errc::precondition, "powers need a punctured space");
  }
  const Elem e = *s.base();
  const unsigned long long m =
      k < 0 ? 0ULL - static_cast<unsigned long long>(k)
            : static_cast<unsigned long long>(k);
  // x^{n} -> x^{n+2} starting from x^0 or x^1 by parity.
  Elem result = (m % 2 == 0) ? e : x;
  for (unsigned long long n = m % 2; n + 2 <= m; n += 2) {
    result = s.dot(x, s.dot(e, result));
  }
  return k < 0 ? s.dot(e, result) : result;
}

bool inversion_automorphism_check(const SymSpace& s) {
  if (!s.base()) {
    throw Error(Errc::precondition, "inversion needs a punctured space");
  }
  const Elem e = *s.base();
  const auto n = static_cast<Elem>(s.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (s.dot(e, s.dot(x, y)) != s.dot(s.dot(e, x), s.dot(e, y))) {
        return false;
      }
    }
  }
  return true;
}

SpaceMapVerdict check_space_homomorphism(const SymSpace& from,
                                         const SymSpace& to,
                                         const std::vector<Elem>& map) {
  if (map.size() != from.size()) {
    return {false, "map does not cover the source carrier"};
  }
  for (Elem v : map) {
    if (v >= to.size()) return {false, "map leaves the target carrier"};
  }
  if (from.base()) {
    if (!to.base()) {
      return {false, "punctured source needs a punctured target"};
    }
    if (map[*from.base()] != *to.base()) {
      return {false, "base point is not sent to the base point"};
    }
  }
  const auto n = static_cast<Elem>(from.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (map[from.dot(x, y)] != to.dot(map[x], map[y])) {
        return {false, "product not preserved at (" + std::to_string(x) +
                           "," + std::to_string(y) + ")"};
      }
    }
  }
  return {};
}

}  // namespace bolkit
