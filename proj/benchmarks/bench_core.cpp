// Copyright 2026 The oppflags Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include <oppflags/exact_linalg.hpp>
#include <oppflags/finite_field.hpp>
#include <oppflags/instance.hpp>
#include <oppflags/types.hpp>

namespace {

using namespace oppflags;

const char* const kInstances[] = {"A:3:2", "B:2:2:2:sp", "B:2:1:4:herm", "A:3:3", "B:3:2:2:sp", "D:4:2"};

void BM_FieldArithmetic(benchmark::State& state) {
  const auto f = FiniteField::of_order(static_cast<std::uint32_t>(state.range(0)));
  std::vector<FieldElement> xs;
  for (std::uint32_t i = 0; i < f.order(); ++i) xs.push_back(f.element(i));
  for (auto _ : state) {
    FieldElement acc = f.one();
    for (const auto x : xs) acc = f.add(f.mul(acc, x), x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldArithmetic)->Arg(4)->Arg(27)->Arg(256);

void BM_Enumerate(benchmark::State& state) {
  const auto* text = kInstances[state.range(0)];
  state.SetLabel(text);
  for (auto _ : state) {
    auto inst = Instance::load(text);
    benchmark::DoNotOptimize(inst.num_flags());
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_OppositionScan(benchmark::State& state) {
  const auto* text = kInstances[state.range(0)];
  state.SetLabel(text);
  const auto inst = Instance::load(text);
  std::vector<std::uint32_t> out;
  std::size_t c = 0;
  for (auto _ : state) {
    inst.opposite_flags(c, out);
    benchmark::DoNotOptimize(out.data());
    c = (c + 7919) % inst.num_flags();
  }
}
BENCHMARK(BM_OppositionScan)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_TypeTable(benchmark::State& state) {
  const auto* text = kInstances[state.range(0)];
  state.SetLabel(text);
  const auto inst = Instance::load(text);
  for (auto _ : state) {
    auto t = TypeTable::build(inst.complex());
    benchmark::DoNotOptimize(t.num_flags());
  }
}
BENCHMARK(BM_TypeTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ModularRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-64, 64);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank_modular(m, kDefaultPrimes).value);
}
BENCHMARK(BM_ModularRank)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_OppositionNullity(benchmark::State& state) {
  const auto inst = Instance::load("A:3:2");
  const auto nb = [&inst](std::size_t c, std::vector<std::uint32_t>& out) { inst.opposite_flags(c, out); };
  for (auto _ : state) benchmark::DoNotOptimize(nullity_for_eigenvalue(nb, inst.num_flags(), -16).value);
}
BENCHMARK(BM_OppositionNullity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
