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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bolkit {

using Point = std::uint32_t;

/// A bijection of {0..m-1} stored as its image sequence. Products act on
/// the right: i^(p*q) = (i^p)^q. Perms are ordered lexicographically by
/// image sequence.
class Perm {
 public:
  Perm() = default;

  /// Throws Error(Errc::out_of_range) unless `images` is a permutation.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Perm compose(const Perm& p, const Perm& q);

  std::vector<Point> images_;
};

/// i^(compose(p, q)) = (i^p)^q. Throws Error(Errc::degree_mismatch).
Perm compose(const Perm& p, const Perm& q);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// g^{-1} h g
Perm conjugate(const Perm& h, const Perm& g);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace bolkit
