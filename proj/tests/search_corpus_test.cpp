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

#include <set>

#include "bolkit/corpus.hpp"
#include "bolkit/identities.hpp"
#include "bolkit/search.hpp"
#include "bolkit/table_io.hpp"
#include "support.hpp"

namespace bolkit {
namespace {

using testing::error_code;

BolSearchResult search(std::size_t n, std::optional<std::size_t> first = {},
                       bool non_moufang = false) {
  BolSearchOptions opt;
  opt.order = n;
  opt.first = first;
  opt.non_moufang = non_moufang;
  return bol_search(opt);
}

// Every table with identity 0 of order n, checked by brute force.
std::size_t brute_force_bol_count(std::size_t n) {
  std::size_t count = 0;
  const std::size_t free = (n - 1) * (n - 1);
  std::vector<Elem> cells(n * n);
  std::vector<Elem> digits(free, 0);
  while (true) {
    for (Elem i = 0; i < n; ++i) {
      cells[i] = i;
      cells[i * n] = i;
    }
    for (std::size_t k = 0; k < free; ++k) {
      cells[(k / (n - 1) + 1) * n + k % (n - 1) + 1] = digits[k];
    }
    const Magma m = Magma::from_cells(n, cells);
    if (!find_latin_defect(m) && check_law_naive(Law::right_bol, m).holds) {
      ++count;
    }
    std::size_t k = 0;
    while (k < free && ++digits[k] == n) digits[k++] = 0;
    if (k == free) break;
  }
  return count;
}

TEST(BolSearch, SmallOrdersMatchBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const BolSearchResult r = search(n);
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(r.tables.size(), brute_force_bol_count(n)) << n;
  }
  EXPECT_EQ(search(4).tables.size(), 4u);
}

TEST(BolSearch, EmitsDistinctBolLoopsInOrder) {
  const BolSearchResult r = search(6);
  ASSERT_FALSE(r.tables.empty());
  std::set<std::vector<std::vector<Elem>>> seen;
  for (std::size_t i = 0; i < r.tables.size(); ++i) {
    const CayleyTable& t = r.tables[i];
    EXPECT_TRUE(check_law_naive(Law::right_bol, t).holds);
    EXPECT_EQ(find_identity(t), Elem{0});
    EXPECT_TRUE(seen.insert(t.rows()).second);
    if (i > 0) {
      EXPECT_LT(r.tables[i - 1].rows(), t.rows());
    }
  }
}

TEST(BolSearch, Deterministic) {
  const BolSearchResult a = search(6);
  const BolSearchResult b = search(6);
  EXPECT_EQ(a.nodes, b.nodes);
  ASSERT_EQ(a.tables.size(), b.tables.size());
  for (std::size_t i = 0; i < a.tables.size(); ++i) {
    EXPECT_EQ(a.tables[i], b.tables[i]);
  }
}

TEST(BolSearch, FirstStopsEarly) {
  const BolSearchResult all = search(6);
  const BolSearchResult two = search(6, 2);
  ASSERT_EQ(two.tables.size(), 2u);
  EXPECT_FALSE(two.exhausted);
  EXPECT_EQ(two.tables[0], all.tables[0]);
  EXPECT_EQ(two.tables[1], all.tables[1]);
}

TEST(BolSearch, NonMoufangFilter) {
  EXPECT_TRUE(search(6, {}, true).tables.empty());
  const BolSearchResult r = search(8, 1, true);
  ASSERT_EQ(r.tables.size(), 1u);
  EXPECT_FALSE(is_moufang(r.tables[0]).holds);
  EXPECT_EQ(r.tables[0], frozen_b8());
}

TEST(BolSearch, FrozenB8MatchesDataFile) {
  const CayleyTable file =
      validate_table(read_table_file(BOLKIT_DATA_DIR "/corpus/b8.tbl"));
  EXPECT_EQ(file, frozen_b8());
  EXPECT_TRUE(is_right_bol(file).holds);
  EXPECT_FALSE(is_moufang(file).holds);
}

TEST(BolSearch, BudgetAndPreconditions) {
  BolSearchOptions opt;
  opt.order = 8;
  opt.budget = 5;
  EXPECT_EQ(error_code([&] { bol_search(opt); }),
            Errc::search_budget_exceeded);
  opt.order = 0;
  EXPECT_EQ(error_code([&] { bol_search(opt); }), Errc::precondition);
  opt.order = 65;
  EXPECT_EQ(error_code([&] { bol_search(opt); }), Errc::too_large);
}

TEST(BolSearch, Checkpoints) {
  BolSearchOptions opt;
  opt.order = 6;
  opt.checkpoint_every = 10;
  std::vector<std::uint64_t> seen;
  opt.on_checkpoint = [&](std::uint64_t n) { seen.push_back(n); };
  const BolSearchResult r = bol_search(opt);
  EXPECT_EQ(seen.size(), r.nodes / 10);
  for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_EQ(seen[i], 10 * (i + 1));
}

TEST(Corpus, GroupsAreGroups) {
  for (const char* name : {"z1", "z7", "d5", "s4", "a4", "q8", "z2xz2xz2",
                           "S3xZ2"}) {
    const CayleyTable t = group_table(name);
    EXPECT_TRUE(is_associative(t).holds) << name;
    EXPECT_EQ(find_identity(t), Elem{0}) << name;
  }
  EXPECT_EQ(group_table("d6").order(), 12u);
  EXPECT_EQ(group_table("a5").order(), 60u);
  EXPECT_EQ(group_table("z3xz3").order(), 9u);
  EXPECT_EQ(error_code([] { group_table("foo"); }), Errc::parse);
}

TEST(Corpus, CheinDoublesAreMoufang) {
  for (const char* name : {"s3", "d4", "q8", "a4"}) {
    const CayleyTable t = chein_double(named_group(name));
    EXPECT_TRUE(is_moufang(t).holds) << name;
    EXPECT_TRUE(is_right_bol(t).holds) << name;
    EXPECT_FALSE(is_associative(t).holds) << name;
  }
  // Abelian doubles are groups.
  EXPECT_TRUE(is_associative(chein_double(named_group("z4"))).holds);
}

TEST(Corpus, StandardLoopsAreBol) {
  std::set<std::string> names;
  for (const NamedLoop& nl : standard_loops()) {
    EXPECT_TRUE(names.insert(nl.name).second) << nl.name;
    EXPECT_TRUE(is_right_bol(nl.loop.table()).holds) << nl.name;
  }
  EXPECT_TRUE(names.count("b8"));
  EXPECT_TRUE(names.count("a5"));
}

TEST(Corpus, InvolutionsValidate) {
  for (const NamedInstance& inst : standard_instances()) {
    const auto& gw = inst.gw;
    for (Elem x = 0; x < gw.group().order(); ++x) {
      EXPECT_EQ(gw.sigma(gw.sigma(x)), x) << inst.name;
    }
    EXPECT_FALSE(gw.trivial()) << inst.name;
  }
  EXPECT_EQ(error_code([] { negation_involution(2); }), Errc::precondition);
  EXPECT_EQ(error_code([] { negation_instance(4); }), Errc::precondition);
}

TEST(Corpus, DataFilesMatchBuilders) {
  for (const NamedLoop& nl : standard_loops()) {
    const auto path =
        std::string(BOLKIT_DATA_DIR) + "/corpus/" + nl.name + ".tbl";
    const CayleyTable file = validate_table(read_table_file(path));
    EXPECT_EQ(file, nl.loop.table()) << nl.name;
  }
}

}  // namespace
}  // namespace bolkit
