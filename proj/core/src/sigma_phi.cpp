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
#include "bolkit/sigma_phi.hpp"

#include <algorithm>
#include <string>

#include "bolkit/identities.hpp"

namespace bolkit {

namespace {

std::string elems(std::initializer_list<std::pair<const char*, Elem>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Smallest element of the right coset I g, used as the coset's key.
Elem coset_key(const FiniteGroup& g, const ElementSet& sub, Elem x) {
  Elem best = ~Elem{0};
  for (Elem i : sub) best = std::min(best, g.mul(i, x));
  return best;
}

ElementSet phi_image(const SigmaPhiData& d, const ElementSet& s) {
  std::vector<Elem> out;
  out.reserve(s.size());
  for (Elem x : s) out.push_back(d.phi(x));
  return make_set(std::move(out));
}

}  // namespace

SigmaPhiData::SigmaPhiData(GroupWithInvolution gw,
                           const std::vector<std::pair<Elem, Elem>>& phi)
    : gw_(std::move(gw)) {
  const auto t = twisted_set(gw_);
  twisted_ = t.elements;
  n_ = t.generated;
  fixed_ = fixed_subgroup(gw_);
  phi_.assign(group().order(), std::nullopt);
  for (const auto& [n, g] : phi) {
    if (n >= group().order() || g >= group().order()) {
      throw Error(Errc::precondition, "phi pair out of range: " +
                                          elems({{"n", n}, {"g", g}}));
    }
    if (!set_contains(n_, n)) {
      throw Error(Errc::precondition,
                  "phi given outside N = <G_sigma>: " + elems({{"n", n}}));
    }
    if (phi_[n]) {
      throw Error(Errc::precondition,
                  "phi given twice for " + elems({{"n", n}}));
    }
    phi_[n] = g;
  }
  for (Elem n : n_) {
    if (!phi_[n]) {
      throw Error(Errc::precondition,
                  "phi is not total on N: missing " + elems({{"n", n}}));
    }
  }
}

Elem SigmaPhiData::phi(Elem x) const {
  if (x >= phi_.size() || !phi_[x]) {
    throw Error(Errc::precondition,
                "phi is only defined on N: " + elems({{"x", x}}));
  }
  return *phi_[x];
}

std::vector<std::pair<Elem, Elem>> SigmaPhiData::phi_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem n : n_) out.emplace_back(n, *phi_[n]);
  return out;
}

SigmaPhiVerdict verify_sigma_phi(const SigmaPhiData& d) {
  const auto& g = d.group();
  SigmaPhiVerdict v;

  for (Elem a : d.generated()) {
    for (Elem b : d.generated()) {
      if (d.phi(g.mul(a, b)) != g.mul(d.phi(a), d.phi(b))) {
        v.homomorphism = {false, elems({{"a", a}, {"b", b}})};
        break;
      }
    }
    if (!v.homomorphism.ok) break;
  }

  const ElementSet image = phi_image(d, d.twisted());
  std::vector<Elem> gens(image.begin(), image.end());
  for (Elem x : image) gens.push_back(d.sigma(x));
  const auto span = g.generated(gens);
  if (span.size() != g.order()) {
    v.generation = {false, "generated subgroup has order " +
                               std::to_string(span.size()) + " of " +
                               std::to_string(g.order())};
  }

  for (Elem x : d.twisted()) {
    const Elem p = d.phi(x);
    const Elem t = g.mul(g.inv(p), d.sigma(p));
    if (d.phi(t) != p) {
      v.retraction = {false, elems({{"x", x}, {"phi(x)", p},
                                    {"phi(twist)", d.phi(t)}})};
      break;
    }
  }

  const ElementSet image_n = g.generated(phi_image(d, d.generated()));
  const ElementSet stab = intersect(d.fixed(), image_n);
  for (Elem x : image_n) {
    bool met = false;
    for (Elem i : stab) {
      if (set_contains(image, g.mul(i, x))) {
        met = true;
        break;
      }
    }
    if (!met) {
      v.coset_cover = {false, "coset of " + elems({{"g", x}}) +
                                  " misses phi(G_sigma)"};
      break;
    }
  }
  return v;
}

ConstructedLoop construct_loop(const SigmaPhiData& d) {
  const auto verdict = verify_sigma_phi(d);
  if (!verdict.ok()) {
    std::string which;
    if (!verdict.homomorphism.ok) which += " homomorphism";
    if (!verdict.generation.ok) which += " generation";
    if (!verdict.retraction.ok) which += " retraction";
    if (!verdict.coset_cover.ok) which += " coset_cover";
    throw Error(Errc::condition_failure, "conditions failed:" + which);
  }
  const auto& g = d.group();
  const ElementSet image_n = phi_image(d, d.generated());
  const ElementSet stab = intersect(d.fixed(), image_n);
  const ElementSet rep = phi_image(d, d.twisted());
  const auto k = static_cast<Elem>(rep.size());

  std::vector<Elem> carrier_of(g.order(), ~Elem{0});  // coset key -> index
  for (Elem i = 0; i < k; ++i) {
    const Elem key = coset_key(g, stab, rep[i]);
    if (carrier_of[key] != ~Elem{0}) {
      throw Error(Errc::uniqueness_violation,
                  "coset of " + elems({{"g", key}}) +
                      " holds two elements of phi(G_sigma)");
    }
    carrier_of[key] = i;
  }

  std::vector<Elem> cells(static_cast<std::size_t>(k) * k);
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) {
      const Elem key = coset_key(g, stab, g.mul(rep[x], rep[y]));
      if (carrier_of[key] == ~Elem{0}) {
        throw Error(Errc::axiom_failure, "coset action left phi(G_sigma)");
      }
      cells[x * k + y] = carrier_of[key];
    }
  }
  std::optional<Loop> loop;
  try {
    loop = validate_loop(CayleyTable(Magma::from_cells(k, std::move(cells))));
  } catch (const Error& e) {
    throw Error(Errc::axiom_failure,
                std::string("constructed table is not a loop: ") + e.what());
  }
  if (loop->original_labels()[0] != 0) {
    throw Error(Errc::axiom_failure, "P_e is not the identity");
  }
  if (!is_right_bol(loop->table()).holds) {
    throw Error(Errc::axiom_failure, "constructed loop is not right Bol");
  }
  const bool injective = image_n.size() == d.generated().size();
  if (injective && !is_moufang(loop->table()).holds) {
    throw Error(Errc::axiom_failure,
                "phi is injective but the loop is not Moufang");
  }
  std::vector<Elem> right(k);
  for (Elem x = 0; x < k; ++x) right[x] = d.sigma(rep[loop->inv(x)]);
  return ConstructedLoop{std::move(*loop), rep,   std::move(right),
                         image_n,          stab,  injective};
}

RelationVerdict relations_check(const SigmaPhiData& d,
                                const ConstructedLoop& c) {
  const auto& g = d.group();
  const auto& l = c.loop;
  const auto k = static_cast<Elem>(l.order());
  const auto& p = c.rep;
  const auto& r = c.right;
  RelationVerdict v;

  if (p[0] != 0 || r[0] != 0) v.unit = {false, "P_e or R_e is not 1"};

  for (Elem x = 0; x < k && v.inverse.ok; ++x) {
    if (p[l.inv(x)] != g.inv(p[x]) || r[l.inv(x)] != g.inv(r[x])) {
      v.inverse = {false, elems({{"x", x}})};
    }
  }
  for (Elem x = 0; x < k && v.sandwich.ok; ++x) {
    for (Elem y = 0; y < k; ++y) {
      const Elem xyx = l.mul(l.mul(x, y), x);
      if (p[xyx] != g.mul(g.mul(p[x], p[y]), p[x]) ||
          r[xyx] != g.mul(g.mul(r[x], r[y]), r[x])) {
        v.sandwich = {false, elems({{"x", x}, {"y", y}})};
        break;
      }
    }
  }
  for (Elem x = 0; x < k && v.associator.ok; ++x) {
    for (Elem y = 0; y < k; ++y) {
      const Elem xy = l.mul(x, y);
      const Elem lhs = g.mul(g.mul(p[x], p[y]), g.inv(p[xy]));
      const Elem rhs = g.mul(g.mul(g.inv(r[x]), g.inv(r[y])), r[xy]);
      if (lhs != rhs) {
        v.associator = {false, elems({{"x", x}, {"y", y}})};
        break;
      }
    }
  }
  return v;
}

bool corollary1_check(const SigmaPhiData& d, const ConstructedLoop& c) {
  const auto& g = d.group();
  const auto& l = c.loop;
  const auto k = static_cast<Elem>(l.order());
  std::vector<Elem> gens;
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) {
      gens.push_back(g.mul(g.mul(c.rep[x], c.rep[y]), g.inv(c.rep[l.mul(x, y)])));
    }
  }
  const ElementSet generated = g.generated(make_set(std::move(gens)));

  // Stabilizer of e under the action: e g = e iff I g = I P_e = I.
  const Elem identity_key = coset_key(g, c.stabilizer, 0);
  ElementSet fixing;
  for (Elem x : c.image_n) {
    if (coset_key(g, c.stabilizer, x) == identity_key) fixing.push_back(x);
  }
  return generated == c.stabilizer && fixing == c.stabilizer;
}

Admissibility admissibility(const SigmaPhiData& d, const ElementSet& h) {
  const auto& g = d.group();
  if (!g.is_normal_subgroup(h)) {
    throw Error(Errc::not_subgroup, "H is not a normal subgroup of G");
  }
  Admissibility a;
  bool invariant = true;
  for (Elem x : h) invariant = invariant && set_contains(h, d.sigma(x));
  bool moves = false;
  for (Elem x = 0; x < g.order() && !moves; ++x) {
    moves = !set_contains(h, g.mul(g.inv(x), d.sigma(x)));
  }
  a.sigma_adm = invariant && moves;

  a.phi_adm = true;
  for (Elem n : intersect(d.generated(), h)) {
    if (!set_contains(h, d.phi(n))) {
      a.phi_adm = false;
      break;
    }
  }
  return a;
}

bool sigma_phi_simple(const SigmaPhiData& d) {
  const auto& g = d.group();
  for (const auto& h : g.normal_subgroups()) {
    if (h.size() == 1 || h.size() == g.order()) continue;
    const auto a = admissibility(d, h);
    if (a.sigma_adm && a.phi_adm) return false;
  }
  return true;
}

QuotientResult quotient_loop(const SigmaPhiData& d, const ElementSet& h) {
  const auto adm = admissibility(d, h);
  if (!adm.sigma_adm || !adm.phi_adm) {
    throw Error(Errc::precondition,
                std::string("H is not admissible:") +
                    (adm.sigma_adm ? "" : " sigma") +
                    (adm.phi_adm ? "" : " phi"));
  }
  const auto& g = d.group();
  const auto n = static_cast<Elem>(g.order());

  // Cosets of H numbered by minimal representative.
  std::vector<Elem> coset_of(n, ~Elem{0});
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[x] != ~Elem{0}) continue;
    for (Elem y : h) coset_of[g.mul(y, x)] = static_cast<Elem>(reps.size());
    reps.push_back(x);
  }
  const auto q = static_cast<Elem>(reps.size());
  std::vector<Elem> cells(static_cast<std::size_t>(q) * q);
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) {
      cells[a * q + b] = coset_of[g.mul(reps[a], reps[b])];
    }
  }
  FiniteGroup quotient(
      validate_loop(CayleyTable(Magma::from_cells(q, std::move(cells)))));
  std::vector<Elem> sigma_bar(q);
  for (Elem a = 0; a < q; ++a) sigma_bar[a] = coset_of[d.sigma(reps[a])];
  GroupWithInvolution gw_bar(std::move(quotient), std::move(sigma_bar));

  std::vector<std::optional<Elem>> phi_bar(q);
  for (Elem x : d.generated()) {
    const Elem key = coset_of[x];
    const Elem value = coset_of[d.phi(x)];
    if (phi_bar[key] && *phi_bar[key] != value) {
      throw Error(Errc::ill_defined,
                  "induced phi depends on the representative at " +
                      elems({{"n", x}}));
    }
    phi_bar[key] = value;
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < q; ++a) {
    if (phi_bar[a]) pairs.emplace_back(a, *phi_bar[a]);
  }
  SigmaPhiData data(std::move(gw_bar), pairs);
  ConstructedLoop upstairs = construct_loop(d);
  ConstructedLoop downstairs = construct_loop(data);

  const auto k = static_cast<Elem>(upstairs.loop.order());
  std::vector<Elem> projection(k);
  for (Elem x = 0; x < k; ++x) {
    const Elem image = coset_of[upstairs.rep[x]];
    auto it = std::lower_bound(downstairs.rep.begin(), downstairs.rep.end(),
                               image);
    if (it == downstairs.rep.end() || *it != image) {
      throw Error(Errc::homomorphism_failure,
                  "P_x H is not a representative at " + elems({{"x", x}}));
    }
    projection[x] = static_cast<Elem>(it - downstairs.rep.begin());
  }
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) {
      if (projection[upstairs.loop.mul(x, y)] !=
          downstairs.loop.mul(projection[x], projection[y])) {
        throw Error(Errc::homomorphism_failure,
                    "projection fails at " + elems({{"x", x}, {"y", y}}));
      }
    }
  }
  return {std::move(data), std::move(downstairs), std::move(projection),
          std::move(reps)};
}

}  // namespace bolkit
