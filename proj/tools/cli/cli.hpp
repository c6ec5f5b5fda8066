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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bolkit::cli {

enum class ExitCode : int {
  ok = 0,
  usage = 1,      // bad arguments, unreadable or malformed input
  violation = 2,  // a check or invariant failed
  candidate = 3,  // strongly simple non-Moufang Bol loop found
};

enum class Verb {
  validate,
  identify,
  multgroup,
  simple,
  construct,
  symspace,
  scan,
  corpus,
};

struct Options {
  std::string side = "right";          // multgroup
  std::optional<std::string> emit;     // multgroup, symspace
  std::optional<std::size_t> cap;      // closure cap; BOLKIT_CAP otherwise
  bool json = false;
  bool timing = false;
  std::optional<std::string> out;      // construct, corpus

  // corpus
  std::string kind;
  std::string name;
  std::optional<std::string> base;
  std::size_t order = 0;
  std::optional<std::size_t> first;
  bool non_moufang = false;
  std::optional<std::uint64_t> budget;
};

struct Command {
  Verb verb = Verb::validate;
  std::vector<std::string> inputs;
  Options options;
};

/// Parses argv. Returns nullopt after printing help or a usage error;
/// `exit_code` then holds the status to return.
std::optional<Command> parse_args(int argc, const char* const* argv,
                                  std::ostream& out, std::ostream& err,
                                  int& exit_code);

/// Runs one command, writing the report to `out` and diagnostics to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Closure cap from the option, then BOLKIT_CAP, then the library default.
std::size_t effective_cap(const Options& options);

}  // namespace bolkit::cli
