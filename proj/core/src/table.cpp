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
#include "bolkit/table.hpp"

#include <string>
#include <utility>

namespace bolkit {

Magma Magma::from_rows(const RawTable& raw, std::size_t max_order) {
  const std::size_t n = raw.size();
  if (n == 0) {
    throw Error(Errc::not_square, "a table needs at least one element");
  }
  if (n > max_order) {
    throw Error(Errc::too_large, "order " + std::to_string(n) +
                                     " exceeds the configured maximum " +
                                     std::to_string(max_order));
  }
  std::vector<Elem> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(Errc::not_square, "row " + std::to_string(i) + " has " +
                                        std::to_string(raw[i].size()) +
                                        " entries, expected " +
                                        std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const long long v = raw[i][j];
      if (v < 0 || static_cast<unsigned long long>(v) >= n) {
        throw OutOfRangeError(i, j, v);
      }
      cells.push_back(static_cast<Elem>(v));
    }
  }
  return Magma(n, std::move(cells));
}

Magma Magma::from_cells(std::size_t n, std::vector<Elem> cells) {
  if (n == 0 || cells.size() != n * n) {
    throw Error(Errc::not_square, "cell count does not match the order");
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k] >= n) {
      throw OutOfRangeError(k / n, k % n, cells[k]);
    }
  }
  return Magma(n, std::move(cells));
}

std::vector<std::vector<Elem>> Magma::rows() const {
  std::vector<std::vector<Elem>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(static_cast<Elem>(i));
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

std::optional<LatinDefect> find_latin_defect(const Magma& m) {
  const std::size_t n = m.order();
  std::vector<std::size_t> seen(n, 0);
  std::size_t stamp = 0;
  for (Elem x = 0; x < n; ++x) {
    ++stamp;
    for (Elem y = 0; y < n; ++y) {
      auto& s = seen[m(x, y)];
      if (s == stamp) return LatinDefect{Axis::row, x};
      s = stamp;
    }
  }
  for (Elem y = 0; y < n; ++y) {
    ++stamp;
    for (Elem x = 0; x < n; ++x) {
      auto& s = seen[m(x, y)];
      if (s == stamp) return LatinDefect{Axis::column, y};
      s = stamp;
    }
  }
  return std::nullopt;
}

CayleyTable::CayleyTable(Magma m) : Magma(std::move(m)) {
  if (auto defect = find_latin_defect(*this)) {
    throw NotLatinError(defect->axis, defect->index);
  }
}

CayleyTable validate_table(const RawTable& raw, std::size_t max_order) {
  return CayleyTable(Magma::from_rows(raw, max_order));
}

std::optional<Elem> find_identity(const Magma& m) {
  const std::size_t n = m.order();
  for (Elem e = 0; e < n; ++e) {
    bool unit = true;
    for (Elem x = 0; x < n && unit; ++x) {
      unit = m(e, x) == x && m(x, e) == x;
    }
    if (unit) return e;
  }
  return std::nullopt;
}

Loop validate_loop(const CayleyTable& t) {
  const auto e = find_identity(t);
  if (!e) {
    throw Error(Errc::no_identity, "quasigroup has no identity element");
  }
  const std::size_t n = t.order();
  // Transposition (0 e): the new index i carries the old label labels[i].
  std::vector<Elem> labels(n);
  for (Elem i = 0; i < n; ++i) labels[i] = i;
  std::swap(labels[0], labels[*e]);
  const auto& relabel = labels;  // an involution, so it is its own inverse

  std::vector<Elem> cells(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      cells[i * n + j] = relabel[t(labels[i], labels[j])];
    }
  }
  CayleyTable table(Magma::from_cells(n, std::move(cells)));

  std::vector<Elem> inv(n);
  for (Elem x = 0; x < n; ++x) {
    auto r = table.row(x);
    for (Elem y = 0; y < n; ++y) {
      if (r[y] == 0) {
        inv[x] = y;
        break;
      }
    }
  }
  return Loop(std::move(table), std::move(inv), std::move(labels));
}

}  // namespace bolkit
