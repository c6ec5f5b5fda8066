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
#include "bolkit/perm.hpp"

#include <string>

#include "bolkit/error.hpp"

namespace bolkit {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Point p = images_[i];
    if (p >= images_.size() || seen[p]) {
      throw Error(Errc::out_of_range,
                  "image sequence is not a permutation (position " +
                      std::to_string(i) + ")");
    }
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  return Perm(std::move(images), Unchecked{});
}

Perm Perm::from_cycles(
    std::size_t degree,
    const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (const auto& cycle : cycles) {
    for (auto it = cycle.begin(); it != cycle.end(); ++it) {
      const auto next = it + 1 == cycle.end() ? cycle.begin() : it + 1;
      if (*it >= degree) {
        throw Error(Errc::out_of_range, "cycle point outside the degree");
      }
      images[*it] = *next;
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return Perm(std::move(inv), Unchecked{});
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw Error(Errc::degree_mismatch,
                "cannot compose permutations of degree " +
                    std::to_string(p.degree()) + " and " +
                    std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = q.images_[p.images_[i]];
  }
  return Perm(std::move(images), Perm::Unchecked{});
}

Perm conjugate(const Perm& h, const Perm& g) {
  return compose(compose(g.inverse(), h), g);
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace bolkit
