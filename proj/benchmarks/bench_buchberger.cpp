// Copyright 2026 The diffcong Authors
//
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

#include "diffcong/groebner.hpp"
#include "diffcong/prover.hpp"

namespace diffcong {
namespace {

// Args: q, side (0 = E, 1 = S).
void BM_Buchberger(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const Side side = state.range(1) ? Side::kS : Side::kE;
  const auto beta = build_beta(q, side);
  std::size_t size = 0;
  for (auto _ : state) {
    const GroebnerBasis gb = buchberger(beta);
    size = gb.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["basis"] = static_cast<double>(size);
}
BENCHMARK(BM_Buchberger)
    ->Args({5, 0})
    ->Args({7, 0})
    ->Args({11, 0})
    ->Args({13, 0})
    ->Args({5, 1})
    ->Args({7, 1})
    ->Args({11, 1})
    ->Unit(benchmark::kMillisecond);

// Args: q, degree bound.
void BM_TruncatedBuchberger(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto beta = build_beta(q, Side::kE);
  const BuchbergerOptions opts{std::nullopt, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(beta, opts).size());
}
BENCHMARK(BM_TruncatedBuchberger)->Args({13, 6})->Args({17, 4})->Unit(benchmark::kMillisecond);

void BM_BuildBeta(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_beta(q, Side::kS).size());
}
BENCHMARK(BM_BuildBeta)->Arg(5)->Arg(11)->Arg(17);

}  // namespace
}  // namespace diffcong

BENCHMARK_MAIN();
