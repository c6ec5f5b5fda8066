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
#include "bolkit/table_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bolkit/sigma_phi.hpp"
#include "bolkit/symspace.hpp"

namespace bolkit {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped and trimmed, never empty
};

struct Scanned {
  std::vector<Line> lines;
  std::vector<Line> headers;  // raw comment lines starting with "#symspace"
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Scanned scan(std::istream& in) {
  Scanned out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view view = trim(raw);
    if (view.starts_with("#symspace")) {
      out.headers.push_back({number, std::string(view)});
      continue;
    }
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = trim(view.substr(0, hash));
    }
    if (!view.empty()) out.lines.push_back({number, std::string(view)});
  }
  return out;
}

[[noreturn]] void fail(std::string_view source, std::size_t line,
                       const std::string& msg) {
  throw Error(Errc::parse, std::string(source) + ":" + std::to_string(line) +
                               ": " + msg);
}

std::vector<long long> integers(std::string_view source, const Line& line) {
  std::vector<long long> out;
  std::string_view rest = line.text;
  while (true) {
    rest = trim(rest);
    if (rest.empty()) break;
    const auto end = rest.find_first_of(" \t");
    const auto token = rest.substr(0, end);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(source, line.number, "expected an integer, got '" +
                                    std::string(token) + "'");
    }
    out.push_back(v);
    if (end == std::string_view::npos) break;
    rest = rest.substr(end);
  }
  return out;
}

// Reads the order line and n rows starting at lines[pos]; advances pos.
RawTable read_rows(std::string_view source, const std::vector<Line>& lines,
                   std::size_t& pos) {
  if (pos >= lines.size()) fail(source, 0, "missing the order line");
  const auto head = integers(source, lines[pos]);
  if (head.size() != 1 || head[0] < 1) {
    fail(source, lines[pos].number, "first line must be a positive order");
  }
  const auto n = static_cast<std::size_t>(head[0]);
  if (n > kDefaultMaxOrder) {
    fail(source, lines[pos].number,
         "order exceeds the maximum of " + std::to_string(kDefaultMaxOrder));
  }
  ++pos;
  RawTable rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i, ++pos) {
    if (pos >= lines.size()) {
      fail(source, lines.back().number,
           "expected " + std::to_string(n) + " rows, found " +
               std::to_string(i));
    }
    auto row = integers(source, lines[pos]);
    if (row.size() != n) {
      fail(source, lines[pos].number,
           "row has " + std::to_string(row.size()) + " entries, expected " +
               std::to_string(n));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

RawTable parse_table(std::istream& in, std::string_view source) {
  const auto s = scan(in);
  std::size_t pos = 0;
  auto rows = read_rows(source, s.lines, pos);
  if (pos != s.lines.size()) {
    fail(source, s.lines[pos].number, "unexpected content after the table");
  }
  return rows;
}

RawTable parse_table(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse_table(in, source);
}

RawTable read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, path.string() + ": cannot open");
  return parse_table(in, path.string());
}

void write_table(std::ostream& out, const Magma& m,
                 std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  const auto n = static_cast<Elem>(m.order());
  out << n << '\n';
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (y != 0) out << ' ';
      out << m(x, y);
    }
    out << '\n';
  }
}

std::string format_table(const Magma& m,
                         std::span<const std::string> comments) {
  std::ostringstream out;
  write_table(out, m, comments);
  return out.str();
}

void write_table_file(const std::filesystem::path& path, const Magma& m,
                      std::span<const std::string> comments) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse, path.string() + ": cannot write");
  write_table(out, m, comments);
}

SymSpaceText parse_symspace(std::istream& in, std::string_view source) {
  const auto s = scan(in);
  if (s.headers.size() != 1) {
    fail(source, s.headers.empty() ? 1 : s.headers[1].number,
         "expected exactly one '#symspace base=<e|none>' header");
  }
  const Line& h = s.headers.front();
  const std::string_view text = h.text;
  const auto eq = text.find("base=");
  if (eq == std::string_view::npos) fail(source, h.number, "missing base=");
  const auto value = trim(text.substr(eq + 5));
  SymSpaceText out;
  if (value != "none") {
    Line v{h.number, std::string(value)};
    auto parsed = integers(source, v);
    if (parsed.size() != 1 || parsed[0] < 0) {
      fail(source, h.number, "base must be an element index or 'none'");
    }
    out.base = static_cast<Elem>(parsed[0]);
  }
  std::size_t pos = 0;
  out.dot = read_rows(source, s.lines, pos);
  if (pos != s.lines.size()) {
    fail(source, s.lines[pos].number, "unexpected content after the table");
  }
  return out;
}

void write_symspace(std::ostream& out, const SymSpace& s) {
  out << "#symspace base=";
  if (s.base()) {
    out << *s.base();
  } else {
    out << "none";
  }
  out << '\n';
  write_table(out, s.table());
}

Perm parse_perm(std::string_view line) {
  const auto ints = integers("<perm>", Line{1, std::string(trim(line))});
  std::vector<Point> images;
  images.reserve(ints.size());
  for (long long v : ints) {
    if (v < 0) throw Error(Errc::parse, "negative image in permutation");
    images.push_back(static_cast<Point>(v));
  }
  try {
    return Perm(std::move(images));
  } catch (const Error& e) {
    throw Error(Errc::parse, e.what());
  }
}

std::string format_perm(const Perm& p) {
  std::string s;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i != 0) s += ' ';
    s += std::to_string(p[static_cast<Point>(i)]);
  }
  return s;
}

std::vector<Perm> parse_perm_list(std::istream& in, std::string_view source) {
  std::vector<Perm> out;
  for (const auto& line : scan(in).lines) {
    try {
      out.push_back(parse_perm(line.text));
    } catch (const Error& e) {
      fail(source, line.number, e.what());
    }
  }
  return out;
}

void write_perm_list(std::ostream& out, std::span<const Perm> perms) {
  for (const Perm& p : perms) out << format_perm(p) << '\n';
}

InstanceText parse_instance(std::istream& in, std::string_view source) {
  const auto s = scan(in);
  std::size_t pos = 0;
  InstanceText out;
  out.group = read_rows(source, s.lines, pos);
  for (; pos < s.lines.size(); ++pos) {
    const Line& line = s.lines[pos];
    std::string_view text = line.text;
    if (text.starts_with("sigma:")) {
      if (out.sigma) fail(source, line.number, "duplicate sigma line");
      out.sigma = integers(source, Line{line.number,
                                        std::string(text.substr(6))});
    } else if (text == "phi:") {
      if (out.has_phi) fail(source, line.number, "duplicate phi block");
      out.has_phi = true;
    } else if (out.has_phi && text.find("->") != std::string_view::npos) {
      const auto arrow = text.find("->");
      const auto lhs = integers(source, Line{line.number,
                                             std::string(text.substr(0, arrow))});
      const auto rhs = integers(source, Line{line.number,
                                             std::string(text.substr(arrow + 2))});
      if (lhs.size() != 1 || rhs.size() != 1) {
        fail(source, line.number, "phi lines read 'n -> g'");
      }
      out.phi.emplace_back(lhs[0], rhs[0]);
    } else {
      fail(source, line.number, "unexpected line '" + line.text + "'");
    }
  }
  return out;
}

InstanceText read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, path.string() + ": cannot open");
  return parse_instance(in, path.string());
}

void write_instance(std::ostream& out, const GroupWithInvolution& gw,
                    const std::vector<std::pair<Elem, Elem>>* phi,
                    std::span<const std::string> comments) {
  write_table(out, gw.group().loop().table(), comments);
  out << "sigma:";
  for (Elem s : gw.sigma_map()) out << ' ' << s;
  out << '\n';
  if (phi != nullptr) {
    out << "phi:\n";
    for (const auto& [n, g] : *phi) out << n << " -> " << g << '\n';
  }
}

}  // namespace bolkit
