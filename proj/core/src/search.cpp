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
#include "bolkit/search.hpp"

#include <limits>

#include "bolkit/error.hpp"
#include "bolkit/identities.hpp"

namespace bolkit {

namespace {

constexpr Elem kEmpty = std::numeric_limits<Elem>::max();

class BolSearcher {
 public:
  explicit BolSearcher(const BolSearchOptions& opt)
      : opt_(opt),
        n_(opt.order),
        full_(n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1),
        cells_(n_ * n_, kEmpty),
        row_used_(n_, 0),
        col_used_(n_, 0) {
    for (Elem x = 0; x < n_; ++x) {
      assign(0, x, x);
      if (x != 0) assign(x, 0, x);
    }
    trail_.clear();
  }

  BolSearchResult run() {
    if (propagate()) dfs(0);
    result_.exhausted = !stopped_;
    return std::move(result_);
  }

 private:
  Elem at(Elem x, Elem y) const { return cells_[x * n_ + y]; }

  bool assign(Elem x, Elem y, Elem v) {
    const std::size_t i = x * n_ + y;
    if (cells_[i] != kEmpty) return cells_[i] == v;
    const std::uint64_t bit = std::uint64_t{1} << v;
    if ((row_used_[x] & bit) != 0 || (col_used_[y] & bit) != 0) return false;
    cells_[i] = v;
    row_used_[x] |= bit;
    col_used_[y] |= bit;
    trail_.push_back(i);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t i = trail_.back();
      trail_.pop_back();
      const std::uint64_t bit = std::uint64_t{1} << cells_[i];
      row_used_[i / n_] &= ~bit;
      col_used_[i % n_] &= ~bit;
      cells_[i] = kEmpty;
    }
  }

  // Checks ((xy)z)y = x((yz)y) wherever both sides are known and fills in
  // the last cell of a side when the other side is known. Rows x = 0 and
  // columns y = 0 hold trivially.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      const std::size_t before = trail_.size();
      for (Elem y = 1; y < n_; ++y) {
        for (Elem z = 0; z < n_; ++z) {
          const Elem c = at(y, z);
          const Elem d = c == kEmpty ? kEmpty : at(c, y);
          for (Elem x = 1; x < n_; ++x) {
            const Elem a = at(x, y);
            if (a == kEmpty) continue;
            const Elem b = at(a, z);
            if (b == kEmpty || d == kEmpty) continue;
            const Elem lhs = at(b, y);
            const Elem rhs = at(x, d);
            if (lhs != kEmpty && rhs != kEmpty) {
              if (lhs != rhs) return false;
            } else if (lhs != kEmpty) {
              if (!assign(x, d, lhs)) return false;
            } else if (rhs != kEmpty) {
              if (!assign(b, y, rhs)) return false;
            }
          }
        }
      }
      if (trail_.size() != before) changed = true;
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (cells_[i] == kEmpty &&
          (row_used_[i / n_] | col_used_[i % n_]) == full_) {
        return false;
      }
    }
    return true;
  }

  void emit() {
    CayleyTable t(Magma::from_cells(n_, cells_));
    if (opt_.non_moufang && is_moufang(t).holds) return;
    result_.tables.push_back(std::move(t));
    if (opt_.first && result_.tables.size() >= *opt_.first) stopped_ = true;
  }

  void dfs(std::size_t pos) {
    while (pos < cells_.size() && cells_[pos] != kEmpty) ++pos;
    if (pos == cells_.size()) {
      emit();
      return;
    }
    const Elem x = static_cast<Elem>(pos / n_);
    const Elem y = static_cast<Elem>(pos % n_);
    for (Elem v = 0; v < n_ && !stopped_; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (((row_used_[x] | col_used_[y]) & bit) != 0) continue;
      if (++result_.nodes > opt_.budget) {
        throw Error(Errc::search_budget_exceeded,
                    "search budget of " + std::to_string(opt_.budget) +
                        " nodes exhausted");
      }
      if (opt_.on_checkpoint && opt_.checkpoint_every != 0 &&
          result_.nodes % opt_.checkpoint_every == 0) {
        opt_.on_checkpoint(result_.nodes);
      }
      const std::size_t mark = trail_.size();
      if (assign(x, y, v) && propagate()) dfs(pos + 1);
      undo(mark);
    }
  }

  const BolSearchOptions& opt_;
  std::size_t n_;
  std::uint64_t full_;
  std::vector<Elem> cells_;
  std::vector<std::uint64_t> row_used_;
  std::vector<std::uint64_t> col_used_;
  std::vector<std::size_t> trail_;
  BolSearchResult result_;
  bool stopped_ = false;
};

}  // namespace

BolSearchResult bol_search(const BolSearchOptions& options) {
  if (options.order == 0) {
    throw Error(Errc::precondition, "search order must be at least 1");
  }
  if (options.order > 64) {
    throw Error(Errc::too_large, "search order is limited to 64");
  }
  if (options.first && *options.first == 0) return {{}, 0, false};
  return BolSearcher(options).run();
}

}  // namespace bolkit
