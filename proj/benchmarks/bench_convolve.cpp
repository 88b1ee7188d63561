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

#include "diffcong/oracle.hpp"

namespace diffcong {
namespace {

void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = static_cast<std::uint32_t>(state.range(1));
  const SeqModQ p = partition_seq(q, n);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(p, p));
}
BENCHMARK(BM_Convolve)
    ->Args({1000, 7})
    ->Args({10000, 7})
    ->Args({10000, 65521})
    ->Args({10000, 4294967291})
    ->Args({50000, 17})
    ->Unit(benchmark::kMillisecond);

void BM_SelfConvolutionPowers(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const SeqModQ s = sigma_seq(q, 10001);
  for (auto _ : state) benchmark::DoNotOptimize(self_convolution_powers(s, q - 1));
}
BENCHMARK(BM_SelfConvolutionPowers)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_WeightedConvolve2(benchmark::State& state) {
  const SeqModQ s = sigma_seq(7, 10001);
  const WeightPoly2 w = WeightPoly2::parse("a^6b^2+6a^5b^3+4a^4b^4+3ab", 7);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_convolve2(s, s, w));
}
BENCHMARK(BM_WeightedConvolve2)->Unit(benchmark::kMillisecond);

void BM_PartitionSeq(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partition_seq(17, state.range(0)));
}
BENCHMARK(BM_PartitionSeq)->Arg(10000)->Arg(100000);

}  // namespace
}  // namespace diffcong

BENCHMARK_MAIN();
