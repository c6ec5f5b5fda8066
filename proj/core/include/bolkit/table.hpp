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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bolkit/error.hpp"

namespace bolkit {

/// Index of an element of a finite carrier {0..n-1}.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 4096;

using RawTable = std::vector<std::vector<long long>>;

/// A square table of products with every entry in range. No other
/// axiom is assumed; identity checkers accept any Magma.
class Magma {
 public:
  /// Throws OutOfRangeError for an entry outside {0..n-1}, Errc::not_square
  /// for a ragged matrix and Errc::too_large above `max_order`.
  static Magma from_rows(const RawTable& raw,
                         std::size_t max_order = kDefaultMaxOrder);
  static Magma from_cells(std::size_t n, std::vector<Elem> cells);

  std::size_t order() const noexcept { return n_; }

  Elem operator()(Elem x, Elem y) const noexcept {
    return cells_[static_cast<std::size_t>(x) * n_ + y];
  }

  std::span<const Elem> row(Elem x) const noexcept {
    return {cells_.data() + static_cast<std::size_t>(x) * n_, n_};
  }

  std::span<const Elem> cells() const noexcept { return cells_; }

  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const Magma&, const Magma&) = default;

 protected:
  Magma(std::size_t n, std::vector<Elem> cells)
      : n_(n), cells_(std::move(cells)) {}

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

struct LatinDefect {
  Axis axis;
  std::size_t index;
};

/// First row (then first column) whose entries are not a permutation.
std::optional<LatinDefect> find_latin_defect(const Magma& m);

/// A Latin square: every row and column is a permutation (a quasigroup).
class CayleyTable : public Magma {
 public:
  /// Throws NotLatinError naming the first offending row or column.
  explicit CayleyTable(Magma m);
};

CayleyTable validate_table(const RawTable& raw,
                           std::size_t max_order = kDefaultMaxOrder);

/// A quasigroup with two-sided identity, relabelled so the identity is 0.
class Loop {
 public:
  const CayleyTable& table() const noexcept { return table_; }
  std::size_t order() const noexcept { return table_.order(); }

  Elem mul(Elem x, Elem y) const noexcept { return table_(x, y); }

  /// Solution of x * inv(x) = 0.
  Elem inv(Elem x) const noexcept { return inv_[x]; }

  std::span<const Elem> inverses() const noexcept { return inv_; }

  /// original_labels()[i] is the input label of the element now indexed i.
  std::span<const Elem> original_labels() const noexcept { return labels_; }

  friend bool operator==(const Loop& a, const Loop& b) {
    return a.table_ == b.table_;
  }

 private:
  friend Loop validate_loop(const CayleyTable& t);

  Loop(CayleyTable table, std::vector<Elem> inv, std::vector<Elem> labels)
      : table_(std::move(table)),
        inv_(std::move(inv)),
        labels_(std::move(labels)) {}

  CayleyTable table_;
  std::vector<Elem> inv_;
  std::vector<Elem> labels_;
};

/// Finds the two-sided identity, swaps it to index 0 and fills inverses.
/// Throws Error(Errc::no_identity) when there is no unit element.
Loop validate_loop(const CayleyTable& t);

/// Two-sided identity of a magma, if any.
std::optional<Elem> find_identity(const Magma& m);

}  // namespace bolkit
