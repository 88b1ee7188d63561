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

#include "diffcong/prover.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "test_support.hpp"

namespace diffcong {
namespace {

using testing::scratch_dir;

TEST(BuildBeta, ShapeAndOrder) {
  for (std::uint32_t q : {5u, 7u, 11u}) {
    const auto e = build_beta(q, Side::kE);
    const auto s = build_beta(q, Side::kS);
    ASSERT_EQ(e.size(), 2 * (q - 1));
    ASSERT_EQ(s.size(), 2 * q);
    const auto [b1, b2] = base_relations_E(q);
    const auto [b3, b4] = base_relations_S(q);
    for (unsigned k = 0; k + 1 < q; ++k) {
      EXPECT_EQ(e[2 * k], derive(b1, k));
      EXPECT_EQ(e[2 * k + 1], derive(b2, k));
    }
    for (unsigned k = 0; k < q; ++k) {
      EXPECT_EQ(s[2 * k], derive(b3, k));
      EXPECT_EQ(s[2 * k + 1], derive(b4, k));
    }
  }
}

TEST(BasisFile, RoundTrip) {
  const GroebnerBasis gb = buchberger(build_beta(5, Side::kS));
  const std::string text = render_basis_file(gb, Side::kS);
  EXPECT_EQ(text, testing::read_data("basis_5_S.gb"));
  const auto back = parse_basis_file(text, 5, Side::kS);
  ASSERT_TRUE(back.has_value());
  EXPECT_TRUE(std::equal(back->begin(), back->end(), gb.begin(), gb.end()));
}

TEST(BasisFile, RejectsMismatchedOrDamagedFiles) {
  const std::string good = testing::read_data("basis_5_S.gb");
  EXPECT_FALSE(parse_basis_file(good, 7, Side::kS).has_value());
  EXPECT_FALSE(parse_basis_file(good, 5, Side::kE).has_value());
  EXPECT_FALSE(parse_basis_file("", 5, Side::kS).has_value());
  std::string retagged = good;
  retagged.replace(retagged.find("relations-1"), 11, "relations-0");
  EXPECT_FALSE(parse_basis_file(retagged, 5, Side::kS).has_value());
  std::string truncated = good.substr(0, good.rfind('\n', good.size() - 2) + 1);
  EXPECT_FALSE(parse_basis_file(truncated, 5, Side::kS).has_value());
  std::string garbled = good;
  garbled.replace(garbled.rfind("X3^2"), 4, "Y3^2");
  EXPECT_FALSE(parse_basis_file(garbled, 5, Side::kS).has_value());
}

TEST(BasisStore, SaveAndLoad) {
  const auto dir = scratch_dir("store");
  const BasisStore store(dir / "nested");
  EXPECT_EQ(store.path_for(7, Side::kE).filename(), "7_E.gb");
  EXPECT_FALSE(store.load(5, Side::kE).has_value());
  const GroebnerBasis gb = buchberger(build_beta(5, Side::kE));
  store.save(gb, Side::kE);
  const auto loaded = store.load(5, Side::kE);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_TRUE(std::equal(loaded->begin(), loaded->end(), gb.begin(), gb.end()));
}

TEST(Prover, FirstRamanujanCongruence) {
  Prover prover;
  const ProofResult r = prover.prove(CongruenceSpec::ramanujan(Series::kPartition, 5, 1, 4));
  EXPECT_TRUE(r.error.empty()) << r.error;
  EXPECT_TRUE(r.proved);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(r.certificate->remainder.is_zero());
  EXPECT_TRUE(verify_certificate(*r.certificate));
  EXPECT_EQ(r.certificate->basis.size(), 3u);
  EXPECT_EQ(r.basis_source, BasisSource::kComputed);
  EXPECT_EQ(to_string(r.basis_source), "computed");

  const ProofResult again = prover.prove(CongruenceSpec::ramanujan(Series::kPartition, 5, 2, 2));
  EXPECT_TRUE(again.proved);
  EXPECT_EQ(again.basis_source, BasisSource::kCache);
  EXPECT_EQ(prover.buchberger_calls(), 1u);
}

TEST(Prover, FalseCongruenceIsNotProved) {
  Prover prover;
  const auto spec = CongruenceSpec::ramanujan(Series::kPartition, 5, 1, 3);
  const ProofResult r = prover.prove(spec);
  EXPECT_FALSE(r.proved);
  EXPECT_TRUE(r.error.empty());
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_FALSE(r.certificate->remainder.is_zero());
  EXPECT_TRUE(verify_certificate(*r.certificate));
  EXPECT_FALSE(check_spec(spec, 1000).holds);
}

TEST(Prover, InvalidSpecRecordsError) {
  Prover prover;
  const ProofResult r = prover.prove(CongruenceSpec::ramanujan(Series::kPartition, 5, 5, 1));
  EXPECT_FALSE(r.proved);
  EXPECT_FALSE(r.error.empty());
  EXPECT_FALSE(r.certificate.has_value());
  EXPECT_EQ(prover.buchberger_calls(), 0u);
}

TEST(Prover, TimeoutRecordsError) {
  ProverOptions opts;
  opts.cache_dir = scratch_dir("timeout");
  opts.timeout = std::chrono::milliseconds(0);
  Prover prover(opts);
  const ProofResult r = prover.prove(CongruenceSpec::ramanujan(Series::kDivisor, 7, 2, 6));
  EXPECT_FALSE(r.proved);
  EXPECT_NE(r.error.find("time limit"), std::string::npos) << r.error;
  EXPECT_FALSE(std::filesystem::exists(prover.store()->path_for(7, Side::kS)));
}

TEST(Prover, DiskCache) {
  const auto dir = scratch_dir("cache");
  const auto spec = CongruenceSpec::ramanujan(Series::kDivisor, 5, 2, 1);
  {
    Prover first({std::nullopt, dir, false});
    EXPECT_EQ(first.prove(spec).basis_source, BasisSource::kComputed);
    EXPECT_TRUE(std::filesystem::exists(dir / "5_S.gb"));
  }
  {
    Prover second({std::nullopt, dir, false});
    const ProofResult r = second.prove(spec);
    EXPECT_TRUE(r.proved);
    EXPECT_EQ(r.basis_source, BasisSource::kCache);
    EXPECT_EQ(second.buchberger_calls(), 0u);
  }
  {
    Prover fresh({std::nullopt, dir, true});
    EXPECT_EQ(fresh.prove(spec).basis_source, BasisSource::kComputed);
    EXPECT_EQ(fresh.buchberger_calls(), 1u);
  }
  {
    std::ofstream(dir / "5_S.gb", std::ios::trunc) << "diffcong-basis 1\ngarbage\n";
    Prover damaged({std::nullopt, dir, false});
    const ProofResult r = damaged.prove(spec);
    EXPECT_TRUE(r.proved);
    EXPECT_EQ(r.basis_source, BasisSource::kComputed);
    EXPECT_TRUE(BasisStore(dir).load(5, Side::kS).has_value());
  }
}

TEST(Prover, BatchKeepsOrder) {
  Prover prover;
  const std::vector<CongruenceSpec> specs{
      CongruenceSpec::ramanujan(Series::kPartition, 5, 1, 4),
      CongruenceSpec::ramanujan(Series::kPartition, 5, 0, 4),
      CongruenceSpec::ramanujan(Series::kPartition, 5, 1, 0),
  };
  const auto results = prover.prove_batch(specs);
  ASSERT_EQ(results.size(), 3u);
  EXPECT_TRUE(results[0].proved);
  EXPECT_FALSE(results[1].error.empty());
  EXPECT_FALSE(results[2].proved);
  EXPECT_TRUE(results[2].error.empty());
  EXPECT_EQ(results[2].spec, specs[2]);
}

// Every Ramanujan pair q in {5, 7} is proved exactly when it holds
// numerically.
TEST(Prover, ProvedPairsAreExactlyTheNumericalOnes) {
  Prover prover;
  for (const auto& g : testing::load_ramanujan_golden()) {
    if (g.q > 7) continue;
    const std::set<RamanujanPair> expected(g.pairs.begin(), g.pairs.end());
    for (unsigned k = 1; k < g.q; ++k) {
      for (std::uint32_t r = 0; r < g.q; ++r) {
        const ProofResult res = prover.prove(CongruenceSpec::ramanujan(g.series, g.q, k, r));
        EXPECT_EQ(res.proved, expected.contains({k, r}))
            << to_string(g.series) << " q=" << g.q << " k=" << k << " r=" << r;
      }
    }
  }
}

TEST(Prover, PartitionPairsQ11) {
  Prover prover;
  for (const auto& g : testing::load_ramanujan_golden()) {
    if (g.q != 11 || g.series != Series::kPartition) continue;
    for (const auto& p : g.pairs) {
      EXPECT_TRUE(prover.prove(CongruenceSpec::ramanujan(g.series, 11, p.k, p.r)).proved)
          << p.k << "," << p.r;
    }
  }
}

TEST(Prover, WeightedGoldenEntries) {
  Prover prover;
  for (const auto& g : testing::load_weight_golden()) {
    for (const auto& w : g.weights) {
      const auto spec = CongruenceSpec::weighted2(g.series, g.q, WeightPoly2::parse(w, g.q));
      EXPECT_TRUE(prover.prove(spec).proved) << spec.to_string();
    }
  }
}

TEST(Prover, TruncatedVerdictsMatchFullBases) {
  Prover full;
  Prover cut({std::nullopt, std::nullopt, false, true});
  for (std::uint32_t q : {5u, 7u, 11u, 13u}) {
    for (unsigned k = 1; k < q; ++k) {
      for (std::uint32_t r = 0; r < q; ++r) {
        const auto spec = CongruenceSpec::ramanujan(Series::kPartition, q, k, r);
        const ProofResult a = full.prove(spec);
        const ProofResult b = cut.prove(spec);
        ASSERT_TRUE(b.error.empty()) << b.error;
        EXPECT_EQ(a.proved, b.proved) << spec.to_string();
        EXPECT_FALSE(a.degree_bound.has_value());
        ASSERT_TRUE(b.degree_bound.has_value());
        EXPECT_GE(*b.degree_bound, b.certificate->target.total_degree());
        if (b.proved) EXPECT_TRUE(verify_certificate(*b.certificate));
      }
    }
  }
  const auto lin = CongruenceSpec::lincomb(Series::kPartition, 5, 4, {1, 0, 0, 0});
  EXPECT_EQ(cut.prove(lin).proved, full.prove(lin).proved);
}

TEST(Prover, TruncatedBasesAreReused) {
  Prover prover({std::nullopt, std::nullopt, false, true});
  const auto hi = prover.truncated_basis(7, Side::kE, 6);
  const auto lo = prover.truncated_basis(7, Side::kE, 4);
  EXPECT_EQ(hi, lo);
  EXPECT_EQ(prover.buchberger_calls(), 1u);
  EXPECT_THROW(prover.truncated_basis(7, Side::kS, 4), UsageError);
  const ProofResult r = prover.prove(CongruenceSpec::ramanujan(Series::kDivisor, 7, 2, 6));
  EXPECT_FALSE(r.proved);
  EXPECT_FALSE(r.error.empty());
}

TEST(Prover, TruncatedProofForQ17) {
  Prover prover({std::chrono::milliseconds(60000), std::nullopt, false, true});
  const ProofResult r = prover.prove(CongruenceSpec::ramanujan(Series::kPartition, 17, 13, 14));
  ASSERT_TRUE(r.error.empty()) << r.error;
  EXPECT_TRUE(r.proved);
  EXPECT_TRUE(verify_certificate(*r.certificate));
  EXPECT_EQ(r.degree_bound, 4u);
  // A neighbouring pair that fails numerically is refuted.
  EXPECT_FALSE(check_spec(CongruenceSpec::ramanujan(Series::kPartition, 17, 13, 13), 2000).holds);
  EXPECT_FALSE(prover.prove(CongruenceSpec::ramanujan(Series::kPartition, 17, 13, 13)).proved);
}

}  // namespace
}  // namespace diffcong
