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
#include <utility>
#include <vector>

#include "bolkit/group.hpp"
#include "bolkit/symspace.hpp"

namespace bolkit {

/// A group with involution together with a map phi defined exactly on
/// N = <G_sigma>. The homomorphism property and the three conditions are
/// checked by verify_sigma_phi, not assumed here.
class SigmaPhiData {
 public:
  /// `phi` lists (n, phi(n)) pairs. Throws Error(Errc::precondition) when a
  /// pair lies outside N, is duplicated, or some element of N is missing.
  SigmaPhiData(GroupWithInvolution gw,
               const std::vector<std::pair<Elem, Elem>>& phi);

  const GroupWithInvolution& gw() const noexcept { return gw_; }
  const FiniteGroup& group() const noexcept { return gw_.group(); }
  Elem sigma(Elem x) const noexcept { return gw_.sigma(x); }

  /// Defined for x in N only.
  Elem phi(Elem x) const;

  const ElementSet& twisted() const noexcept { return twisted_; }  // G_sigma
  const ElementSet& generated() const noexcept { return n_; }      // N
  const ElementSet& fixed() const noexcept { return fixed_; }      // I_sigma
  std::vector<std::pair<Elem, Elem>> phi_pairs() const;

 private:
  GroupWithInvolution gw_;
  ElementSet twisted_;
  ElementSet n_;
  ElementSet fixed_;
  std::vector<std::optional<Elem>> phi_;
};

struct ConditionStatus {
  bool ok = true;
  std::string witness;  // empty when ok
};

struct SigmaPhiVerdict {
  ConditionStatus homomorphism;  // phi(ab) = phi(a) phi(b) on N
  ConditionStatus generation;    // G = <x, sigma(x) : x in phi(G_sigma)>
  ConditionStatus retraction;    // phi(phi(x)^{-1} sigma(phi(x))) = phi(x)
  ConditionStatus coset_cover;   // every right coset of I in phi(N) meets
                                 // phi(G_sigma)

  bool ok() const {
    return homomorphism.ok && generation.ok && retraction.ok && coset_cover.ok;
  }
};

SigmaPhiVerdict verify_sigma_phi(const SigmaPhiData& d);

/// The Bol loop on S = phi(G_sigma) with x y = z iff I P_x P_y = I P_z.
/// Carrier index i stands for the i-th smallest element of phi(G_sigma)
/// (index 0 is the group identity).
struct ConstructedLoop {
  Loop loop;
  std::vector<Elem> rep;       // P_x as a group element
  std::vector<Elem> right;     // R_x = sigma(P_{x^{-1}})
  ElementSet image_n;          // phi(N)
  ElementSet stabilizer;       // I = I_sigma cap phi(N)
  bool phi_injective = false;
};

/// Refuses to run unless every condition passes (Errc::condition_failure).
/// Throws Errc::uniqueness_violation if a coset of I holds more than one
/// element of phi(G_sigma), Errc::axiom_failure if the result is not a
/// right Bol loop, or not Moufang while phi is injective on N.
ConstructedLoop construct_loop(const SigmaPhiData& d);

struct RelationVerdict {
  ConditionStatus unit;        // P_e = R_e = 1
  ConditionStatus inverse;     // P_{x^-1} = P_x^-1, R_{x^-1} = R_x^-1
  ConditionStatus sandwich;    // P_{(xy)x} = P_x P_y P_x and the R analogue
  ConditionStatus associator;  // P_x P_y P_{xy}^-1 = R_x^-1 R_y^-1 R_{xy}

  bool ok() const {
    return unit.ok && inverse.ok && sandwich.ok && associator.ok;
  }
};

RelationVerdict relations_check(const SigmaPhiData& d,
                                const ConstructedLoop& c);

/// <P_x P_y P_{xy}^{-1}> = I = {g in phi(N) : e g = e} as subsets of G.
bool corollary1_check(const SigmaPhiData& d, const ConstructedLoop& c);

struct Admissibility {
  bool sigma_adm = false;  // sigma(H) = H and the induced map on G/H is not 1
  bool phi_adm = false;    // phi(N cap H) is inside phi(N) cap H
};

/// Throws Errc::not_subgroup unless H is a normal subgroup of G.
Admissibility admissibility(const SigmaPhiData& d, const ElementSet& h);

/// No proper nontrivial normal subgroup is both sigma- and phi-admissible.
bool sigma_phi_simple(const SigmaPhiData& d);

struct QuotientResult {
  SigmaPhiData data;    // the instance on G/H
  ConstructedLoop loop;
  std::vector<Elem> projection;  // carrier of S -> carrier of S/H
  /// Group element of G/H standing for each coset, by minimal representative.
  std::vector<Elem> coset_reps;
};

/// Builds G/H with the induced sigma and phi, constructs its loop, and
/// checks that P_x -> P_x H is a loop homomorphism. Throws
/// Errc::precondition when H is not admissible, Errc::ill_defined when the
/// induced phi is not well defined, Errc::homomorphism_failure with the
/// offending pair otherwise.
QuotientResult quotient_loop(const SigmaPhiData& d, const ElementSet& h);

}  // namespace bolkit
