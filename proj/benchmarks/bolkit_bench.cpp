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
#include <benchmark/benchmark.h>

#include "bolkit/corpus.hpp"
#include "bolkit/identities.hpp"
#include "bolkit/mult_groups.hpp"
#include "bolkit/search.hpp"
#include "bolkit/sigma_phi.hpp"

namespace {

using namespace bolkit;

CayleyTable table_for(int which) {
  switch (which) {
    case 0: return frozen_b8();
    case 1: return chein_double(named_group("a4"));
    default: return group_table("a5");
  }
}

const char* label_for(int which) {
  switch (which) {
    case 0: return "b8";
    case 1: return "ma4";
    default: return "a5";
  }
}

void BM_BolNaive(benchmark::State& state) {
  const CayleyTable t = table_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_law_naive(Law::right_bol, t));
  }
  state.SetLabel(label_for(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BolNaive)->DenseRange(0, 2);

void BM_BolOperator(benchmark::State& state) {
  const CayleyTable t = table_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_law(Law::right_bol, t));
  }
  state.SetLabel(label_for(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BolOperator)->DenseRange(0, 2);

void BM_MoufangOperator(benchmark::State& state) {
  const CayleyTable t = table_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_law(Law::moufang, t));
  }
  state.SetLabel(label_for(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MoufangOperator)->DenseRange(0, 2);

void BM_RightMultGroup(benchmark::State& state) {
  const Loop l = validate_loop(table_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiplication_group(l, Side::right).order());
  }
  state.SetLabel(label_for(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RightMultGroup)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_FullMultGroupA5(benchmark::State& state) {
  const Loop l = validate_loop(group_table("a5"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiplication_group(l, Side::full).order());
  }
}
BENCHMARK(BM_FullMultGroupA5)->Unit(benchmark::kMillisecond);

void BM_BolSearch(benchmark::State& state) {
  BolSearchOptions opt;
  opt.order = static_cast<std::size_t>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const BolSearchResult r = bol_search(opt);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.tables.size());
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_BolSearch)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ConstructLoop(benchmark::State& state) {
  const NamedInstance inst = swap_projection_instance("s4");
  const SigmaPhiData d(inst.gw, *inst.phi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_loop(d).loop.order());
  }
}
BENCHMARK(BM_ConstructLoop)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
