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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bolkit/perm.hpp"
#include "bolkit/table.hpp"

namespace bolkit {

class SymSpace;
class SigmaPhiData;
class GroupWithInvolution;

// Cayley table text format:
//
//   # comment lines and trailing comments start with '#'
//   3
//   0 1 2
//   1 2 0
//   2 0 1
//
// Row i, column j holds i*j. Errors are Error(Errc::parse) with
// "<source>:<line>: <message>".

RawTable parse_table(std::istream& in, std::string_view source = "<input>");
RawTable parse_table(std::string_view text,
                     std::string_view source = "<input>");
RawTable read_table_file(const std::filesystem::path& path);

void write_table(std::ostream& out, const Magma& m,
                 std::span<const std::string> comments = {});
std::string format_table(const Magma& m,
                         std::span<const std::string> comments = {});
void write_table_file(const std::filesystem::path& path, const Magma& m,
                      std::span<const std::string> comments = {});

/// Symmetric spaces reuse the table format after a header line
/// `#symspace base=<e|none>`.
struct SymSpaceText {
  RawTable dot;
  std::optional<Elem> base;
};

SymSpaceText parse_symspace(std::istream& in,
                            std::string_view source = "<input>");
void write_symspace(std::ostream& out, const SymSpace& s);

/// One permutation per line as its image sequence.
/// Throws Error(Errc::parse) for a malformed line or a non-bijection.
Perm parse_perm(std::string_view line);
std::string format_perm(const Perm& p);
std::vector<Perm> parse_perm_list(std::istream& in,
                                  std::string_view source = "<input>");
void write_perm_list(std::ostream& out, std::span<const Perm> perms);

/// A group table optionally followed by
///
///   sigma: s0 s1 ... s(n-1)
///   phi:
///   n -> g
///   ...
struct InstanceText {
  RawTable group;
  std::optional<std::vector<long long>> sigma;
  bool has_phi = false;
  std::vector<std::pair<long long, long long>> phi;
};

InstanceText parse_instance(std::istream& in,
                            std::string_view source = "<input>");
InstanceText read_instance_file(const std::filesystem::path& path);
void write_instance(std::ostream& out, const GroupWithInvolution& gw,
                    const std::vector<std::pair<Elem, Elem>>* phi,
                    std::span<const std::string> comments = {});

}  // namespace bolkit
