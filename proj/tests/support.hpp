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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bolkit/corpus.hpp"
#include "bolkit/error.hpp"
#include "bolkit/table.hpp"

namespace bolkit::testing {

using Rng = std::mt19937_64;

/// Code of the bolkit::Error thrown by f; records a failure if none is.
template <typename F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a bolkit::Error";
  return Errc::parse;
}

inline Magma magma_of(const std::vector<std::vector<long long>>& rows) {
  return Magma::from_rows(rows);
}

inline Loop loop_of(std::string_view group) {
  return validate_loop(group_table(group));
}

inline Loop loop_of(const CayleyTable& t) { return validate_loop(t); }

/// x*y = x - y mod n.
inline CayleyTable subtraction_table(std::size_t n) {
  RawTable rows(n, std::vector<long long>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      rows[x][y] = static_cast<long long>((x + n - y) % n);
    }
  }
  return validate_table(rows);
}

inline Magma random_magma(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  std::vector<Elem> cells(n * n);
  for (auto& c : cells) c = pick(rng);
  return Magma::from_cells(n, std::move(cells));
}

inline std::vector<Elem> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// An isotope of `base`: (a(x), b(y)) -> c(x*y) with random bijections.
inline CayleyTable random_isotope(const Magma& base, Rng& rng) {
  const std::size_t n = base.order();
  const auto a = random_permutation(n, rng);
  const auto b = random_permutation(n, rng);
  const auto c = random_permutation(n, rng);
  std::vector<Elem> cells(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) cells[a[x] * n + b[y]] = c[base(x, y)];
  }
  return CayleyTable(Magma::from_cells(n, std::move(cells)));
}

/// Relabels a table by a bijection f: f(x) f(y) = f(xy).
inline CayleyTable relabel(const Magma& m, const std::vector<Elem>& f) {
  const std::size_t n = m.order();
  std::vector<Elem> cells(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) cells[f[x] * n + f[y]] = f[m(x, y)];
  }
  return CayleyTable(Magma::from_cells(n, std::move(cells)));
}

}  // namespace bolkit::testing
