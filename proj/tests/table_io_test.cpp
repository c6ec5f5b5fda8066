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
#include <gtest/gtest.h>

#include <sstream>

#include "bolkit/corpus.hpp"
#include "bolkit/symspace.hpp"
#include "bolkit/table_io.hpp"
#include "support.hpp"

namespace bolkit {
namespace {

using testing::error_code;

std::string parse_error(std::string_view text) {
  try {
    parse_table(text, "t.tbl");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse);
    return e.what();
  }
  ADD_FAILURE() << "no error for: " << text;
  return {};
}

TEST(TableIo, ParsesCommentsAndBlankLines) {
  const RawTable t = parse_table(
      "# cyclic\n\n3   # order\n0 1 2\n1 2 0\n  2 0 1  \n");
  EXPECT_EQ(t, (RawTable{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
}

TEST(TableIo, ReportsLineNumbers) {
  EXPECT_NE(parse_error("2\n0 1\n1\n").find("t.tbl:3:"), std::string::npos);
  EXPECT_NE(parse_error("2\n0 x\n1 0\n").find("t.tbl:2:"), std::string::npos);
  EXPECT_NE(parse_error("0\n").find("t.tbl:1:"), std::string::npos);
  EXPECT_NE(parse_error("").find("t.tbl"), std::string::npos);
  EXPECT_NE(parse_error("2\n0 1\n").find("t.tbl"), std::string::npos);
  EXPECT_NE(parse_error("2\n0 1\n1 0\n1 0\n").find("t.tbl:4:"),
            std::string::npos);
}

TEST(TableIo, RoundTripsCorpusTables) {
  for (const NamedLoop& nl : standard_loops()) {
    const std::vector<std::string> comments{"name: " + nl.name};
    const std::string text = format_table(nl.loop.table(), comments);
    EXPECT_EQ(text.rfind("# name: " + nl.name, 0), 0u) << nl.name;
    EXPECT_EQ(validate_table(parse_table(text)), nl.loop.table()) << nl.name;
  }
}

TEST(TableIo, SymSpaceHeader) {
  const SymSpace s = space_on_twisted_set(negation_involution(5));
  std::stringstream buf;
  write_symspace(buf, s);
  const SymSpaceText back = parse_symspace(buf);
  EXPECT_EQ(back.base, s.base());
  EXPECT_EQ(Magma::from_rows(back.dot), s.table());

  std::istringstream none("#symspace base=none\n1\n0\n");
  EXPECT_FALSE(parse_symspace(none).base.has_value());
  std::istringstream missing("1\n0\n");
  EXPECT_EQ(error_code([&] { parse_symspace(missing); }), Errc::parse);
  std::istringstream bad("#symspace base=q\n1\n0\n");
  EXPECT_EQ(error_code([&] { parse_symspace(bad); }), Errc::parse);
}

TEST(TableIo, Perms) {
  const Perm p = parse_perm("2 0 1");
  EXPECT_EQ(format_perm(p), "2 0 1");
  EXPECT_EQ(error_code([] { parse_perm("0 0 1"); }), Errc::parse);
  std::istringstream list("# gens\n1 0 2\n0 2 1\n");
  const auto perms = parse_perm_list(list);
  ASSERT_EQ(perms.size(), 2u);
  std::ostringstream out;
  write_perm_list(out, perms);
  EXPECT_EQ(out.str(), "1 0 2\n0 2 1\n");
  std::istringstream broken("1 0 2\n0 0 1\n");
  try {
    parse_perm_list(broken, "g.txt");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse);
    EXPECT_NE(std::string(e.what()).find("g.txt:2:"), std::string::npos);
  }
}

TEST(TableIo, InstanceRoundTrip) {
  for (const NamedInstance& inst : standard_instances()) {
    if (inst.gw.group().order() > 24) continue;
    std::stringstream buf;
    const PhiPairs* phi = inst.phi ? &*inst.phi : nullptr;
    write_instance(buf, inst.gw, phi, std::vector<std::string>{inst.name});
    const InstanceText back = parse_instance(buf);
    EXPECT_EQ(validate_table(back.group), inst.gw.group().loop().table())
        << inst.name;
    ASSERT_TRUE(back.sigma.has_value());
    for (Elem x = 0; x < inst.gw.group().order(); ++x) {
      EXPECT_EQ((*back.sigma)[x], static_cast<long long>(inst.gw.sigma(x)));
    }
    EXPECT_EQ(back.has_phi, inst.phi.has_value()) << inst.name;
    if (inst.phi) {
      ASSERT_EQ(back.phi.size(), inst.phi->size());
      for (std::size_t i = 0; i < back.phi.size(); ++i) {
        EXPECT_EQ(back.phi[i].first, (*inst.phi)[i].first);
        EXPECT_EQ(back.phi[i].second, (*inst.phi)[i].second);
      }
    }
  }
}

TEST(TableIo, InstanceErrors) {
  std::istringstream bad_sigma("2\n0 1\n1 0\nsigma: 0 x\n");
  EXPECT_EQ(error_code([&] { parse_instance(bad_sigma); }), Errc::parse);
  std::istringstream bad_arrow("2\n0 1\n1 0\nsigma: 0 1\nphi:\n0 - 0\n");
  EXPECT_EQ(error_code([&] { parse_instance(bad_arrow); }), Errc::parse);
  std::istringstream table_only("1\n0\n");
  const InstanceText t = parse_instance(table_only);
  EXPECT_FALSE(t.sigma.has_value());
  EXPECT_FALSE(t.has_phi);
}

TEST(TableIo, MissingFile) {
  EXPECT_EQ(error_code([] { read_table_file("/nonexistent/x.tbl"); }),
            Errc::parse);
}

}  // namespace
}  // namespace bolkit
