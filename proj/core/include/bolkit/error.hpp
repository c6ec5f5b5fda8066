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
#include <stdexcept>
#include <string>
#include <string_view>

namespace bolkit {

enum class Errc {
  out_of_range,
  not_square,
  too_large,
  not_latin,
  no_identity,
  degree_mismatch,
  cap_exceeded,
  not_subgroup,
  invalid_group,
  invalid_involution,
  axiom_failure,
  ill_defined,
  uniqueness_violation,
  condition_failure,
  homomorphism_failure,
  search_budget_exceeded,
  parse,
  precondition,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

enum class Axis { row, column };

class NotLatinError : public Error {
 public:
  NotLatinError(Axis axis, std::size_t index);

  Axis axis() const noexcept { return axis_; }
  std::size_t index() const noexcept { return index_; }

 private:
  Axis axis_;
  std::size_t index_;
};

class OutOfRangeError : public Error {
 public:
  OutOfRangeError(std::size_t row, std::size_t column, long long value);

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }
  long long value() const noexcept { return value_; }

 private:
  std::size_t row_;
  std::size_t column_;
  long long value_;
};

class CapExceededError : public Error {
 public:
  explicit CapExceededError(std::size_t cap);

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace bolkit
