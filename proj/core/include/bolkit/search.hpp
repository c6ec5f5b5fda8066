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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bolkit/table.hpp"

namespace bolkit {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct BolSearchOptions {
  std::size_t order = 0;
  /// Stop after this many emitted tables; unlimited when empty.
  std::optional<std::size_t> first;
  /// Emit only tables that fail the Moufang identity.
  bool non_moufang = false;
  /// Branching nodes allowed before Errc::search_budget_exceeded.
  std::uint64_t budget = kDefaultSearchBudget;
  /// Called every `checkpoint_every` nodes with the running node count.
  std::function<void(std::uint64_t)> on_checkpoint;
  std::uint64_t checkpoint_every = 1'000'000;
};

struct BolSearchResult {
  std::vector<CayleyTable> tables;  // in lexicographic order of cells
  std::uint64_t nodes = 0;
  bool exhausted = false;  // false when stopped early by `first`
};

/// Depth-first completion of order-n Cayley tables with identity 0, filling
/// cells row by row with values in increasing order. Latin constraints and
/// the right Bol law R_y R_z R_y = R_{(yz)y} prune partial tables and force
/// cells whose value is implied. Every emitted table is a right Bol loop.
/// Throws Errc::precondition for order 0 and Errc::search_budget_exceeded
/// when the node budget runs out.
BolSearchResult bol_search(const BolSearchOptions& options);

}  // namespace bolkit
