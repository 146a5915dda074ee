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

#include <benchmark/benchmark.h>

#include "amenable/dimension.hpp"
#include "amenable/foelner.hpp"
#include "amenable/subshift.hpp"

namespace amenable {
namespace {

void BM_GoldenMeanCount(benchmark::State& state) {
  const auto seq = FoelnerSequence::lattice_boxes(1);
  const FiniteSubset f = seq.set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_locally_admissible(Subshift::golden_mean(), f));
  }
}
BENCHMARK(BM_GoldenMeanCount)->Arg(10)->Arg(30)->Arg(100);

void BM_HardSquareCount(benchmark::State& state) {
  const auto seq = FoelnerSequence::lattice_boxes(2);
  const FiniteSubset f = seq.set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_locally_admissible(Subshift::hard_square(), f));
  }
}
BENCHMARK(BM_HardSquareCount)->Arg(4)->Arg(6)->Arg(8);

void BM_BowenEstimate(benchmark::State& state) {
  const auto seq = FoelnerSequence::lattice_boxes(1);
  EstimateParams params;
  params.n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bowen_entropy_estimate(Subshift::golden_mean(), seq, params));
  }
}
BENCHMARK(BM_BowenEstimate)->Arg(16)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ProductSet(benchmark::State& state) {
  const Group z2 = Group::integer_lattice(2);
  const auto a = FiniteSubset::cube(z2, 0, state.range(0));
  const auto k = FiniteSubset::cube(z2, -2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(product_set(k, a));
}
BENCHMARK(BM_ProductSet)->Arg(16)->Arg(64)->Arg(256);

}  // namespace
}  // namespace amenable
