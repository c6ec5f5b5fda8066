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
#include <vector>

#include "bolkit/group.hpp"
#include "bolkit/identities.hpp"

namespace bolkit {

/// The three defining identities of a symmetric space:
///   x.x = x,  x.(x.y) = y,  x.(y.z) = (x.y).(x.z).
enum class SymAxiom { idempotent, left_symmetric, left_distributive };

std::string_view axiom_name(SymAxiom a);

struct AxiomWitness {
  bool holds = true;
  std::optional<SymAxiom> axiom;
  /// Unused coordinates repeat x: (x,x,x) for idempotence, (x,y,y) for
  /// left symmetry.
  std::optional<Triple> counterexample;
};

/// Checks the axioms in order (n + n^2 + n^3 evaluations), reporting the
/// first failing instance.
AxiomWitness check_symspace(const Magma& dot);

/// A finite symmetric space, optionally punctured at a base point. Spaces
/// built from a group remember which group element (or coset
/// representative) each carrier index stands for.
class SymSpace {
 public:
  /// Throws Error(Errc::axiom_failure) if an axiom fails.
  SymSpace(Magma dot, std::optional<Elem> base,
           std::vector<Elem> labels = {});

  std::size_t size() const noexcept { return dot_.order(); }
  Elem dot(Elem x, Elem y) const noexcept { return dot_(x, y); }
  const Magma& table() const noexcept { return dot_; }
  std::optional<Elem> base() const noexcept { return base_; }
  const std::vector<Elem>& labels() const noexcept { return labels_; }

 private:
  Magma dot_;
  std::optional<Elem> base_;
  std::vector<Elem> labels_;
};

/// A finite group with an involutory automorphism sigma.
class GroupWithInvolution {
 public:
  /// Throws Error(Errc::invalid_involution) unless sigma is an automorphism
  /// with sigma^2 = 1; the identity map is refused unless `allow_trivial`.
  GroupWithInvolution(FiniteGroup group, std::vector<Elem> sigma,
                      bool allow_trivial = false);

  const FiniteGroup& group() const noexcept { return group_; }
  Elem sigma(Elem x) const noexcept { return sigma_[x]; }
  const std::vector<Elem>& sigma_map() const noexcept { return sigma_; }
  bool trivial() const noexcept { return trivial_; }

 private:
  FiniteGroup group_;
  std::vector<Elem> sigma_;
  bool trivial_ = false;
};

/// Fixed points of sigma (a subgroup).
ElementSet fixed_subgroup(const GroupWithInvolution& gw);

struct TwistedSet {
  ElementSet elements;   // { x^{-1} sigma(x) }
  ElementSet generated;  // the subgroup N they generate
};

TwistedSet twisted_set(const GroupWithInvolution& gw);

/// The twisted set with x.y = x y^{-1} x, punctured at the identity.
SymSpace space_on_twisted_set(const GroupWithInvolution& gw);

/// Right cosets I x of the fixed subgroup with
///   I x . I y = I sigma(y) sigma(x)^{-1} x,
/// evaluated from every representative pair. Labels are minimal coset
/// representatives; punctured at the coset I. Throws Errc::ill_defined if
/// two representative pairs disagree.
SymSpace coset_space(const GroupWithInvolution& gw);

struct PsiVerdict {
  bool ok = true;
  std::string failure;  // empty when ok
};

/// Checks that I x -> x^{-1} sigma(x) is well defined, bijective onto the
/// twisted set, and carries the coset product to x.y = x y^{-1} x.
PsiVerdict psi_isomorphism_check(const GroupWithInvolution& gw);

/// Powers about the base point e: x^0 = e, x^1 = x, x^{n+2} = x.(e.x^n),
/// x^{-n} = e.x^n. Throws Errc::precondition without a base point.
Elem space_power(const SymSpace& s, Elem x, long long k);

/// (x.y)^{-1} = x^{-1}.y^{-1} for all pairs.
bool inversion_automorphism_check(const SymSpace& s);

struct SpaceMapVerdict {
  bool ok = true;
  std::string failure;
};

/// Validates a map of carriers as a homomorphism of (punctured) spaces:
/// in range, dot-preserving, and base point to base point when both are
/// punctured.
SpaceMapVerdict check_space_homomorphism(const SymSpace& from,
                                         const SymSpace& to,
                                         const std::vector<Elem>& map);

}  // namespace bolkit
