// Copyright 2026 The Amenable Entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include <benchmark/benchmark.h>

#include "amenable/covering.hpp"

namespace amenable {
namespace {

void BM_DisjointnessDecision(benchmark::State& state) {
  const Group z = Group::integer_lattice(1);
  std::vector<FiniteSubset> collection;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    collection.push_back(FiniteSubset::cube(z, 7 * i, 7 * i + 8));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_disjoint_decide(collection, Rational(1, 4)));
  }
}
BENCHMARK(BM_DisjointnessDecision)->Arg(8)->Arg(64)->Arg(256);

void BM_Selection(benchmark::State& state) {
  const Group z = Group::integer_lattice(1);
  RandomInstanceParams params;
  params.ambient_extent = state.range(0);
  const CoveringInstance instance = random_instance(z, 1, params);
  for (auto _ : state) benchmark::DoNotOptimize(lindenstrauss_select(instance));
}
BENCHMARK(BM_Selection)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace amenable
