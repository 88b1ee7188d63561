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

// Args: q, k, r of a partition congruence.
void BM_NormalForm(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto spec = CongruenceSpec::ramanujan(Series::kPartition, q, state.range(1),
                                              static_cast<std::uint32_t>(state.range(2)));
  const GroebnerBasis gb = buchberger(build_beta(q, Side::kE));
  const DiffPoly target = build_target(spec);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(target, gb));
  state.counters["target_terms"] = static_cast<double>(target.size());
}
BENCHMARK(BM_NormalForm)->Args({5, 1, 4})->Args({7, 1, 5})->Args({11, 1, 6})->Args({11, 10, 10});

void BM_VerifyCertificate(benchmark::State& state) {
  const auto spec = CongruenceSpec::ramanujan(Series::kPartition, 11, 10, 10);
  const GroebnerBasis gb = buchberger(build_beta(11, Side::kE));
  const Certificate c = normal_form(build_target(spec), gb);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c));
}
BENCHMARK(BM_VerifyCertificate);

void BM_BuildTarget(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto spec = CongruenceSpec::ramanujan(Series::kPartition, q, q - 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_target(spec));
}
BENCHMARK(BM_BuildTarget)->Arg(5)->Arg(11)->Arg(17);

}  // namespace
}  // namespace diffcong

BENCHMARK_MAIN();
