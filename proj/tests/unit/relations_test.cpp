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

#include "diffcong/relations.hpp"

#include <set>

#include <gtest/gtest.h>

#include "diffcong/prover.hpp"
#include "test_support.hpp"

namespace diffcong {
namespace {

DiffPoly P(const char* text, std::uint32_t q = 5) { return DiffPoly::parse(text, q); }

TEST(Enums, RoundTrip) {
  for (Side s : {Side::kE, Side::kS}) EXPECT_EQ(parse_side(to_string(s)), s);
  for (Series s : {Series::kPartition, Series::kDivisor}) EXPECT_EQ(parse_series(to_string(s)), s);
  for (Family f : {Family::kRamanujan, Family::kLinComb, Family::kWeighted2}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_EQ(to_string(Family::kWeighted2), "weighted");
  EXPECT_EQ(parse_family("weighted2"), Family::kWeighted2);
  EXPECT_THROW(parse_side("X"), UsageError);
  EXPECT_THROW(parse_series("sigma"), UsageError);
  EXPECT_THROW(parse_family("other"), UsageError);
  EXPECT_EQ(side_of(Series::kPartition), Side::kE);
  EXPECT_EQ(side_of(Series::kDivisor), Side::kS);
}

TEST(ResidueProfile, SmallPrimes) {
  const ResidueProfile p5 = residue_profile(5);
  EXPECT_EQ(p5.reached_E, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(p5.reached_J, (std::vector<std::uint32_t>{0, 1}));
  const ResidueProfile p7 = residue_profile(7);
  EXPECT_EQ(p7.reached_E, (std::vector<std::uint32_t>{0, 1, 2, 5}));
  EXPECT_EQ(p7.reached_J, (std::vector<std::uint32_t>{0, 1, 3}));
  EXPECT_THROW(residue_profile(3), UsageError);
}

// The reached residues are exactly the exponents mod q that carry nonzero
// coefficients in E and J.
TEST(ResidueProfile, MatchesSeriesSupport) {
  for (std::uint32_t q : {5u, 7u, 11u, 13u, 17u}) {
    const SeqModQ e = pentagonal_seq(q, 40 * q * q);
    const SeqModQ j = jacobi_seq(q, 40 * q * q);
    std::set<std::uint32_t> se, sj;
    for (std::size_t n = 0; n < e.size(); ++n) {
      if (e[n] != 0) se.insert(n % q);
      if (j[n] != 0) sj.insert(n % q);
    }
    const ResidueProfile prof = residue_profile(q);
    EXPECT_EQ(std::vector<std::uint32_t>(se.begin(), se.end()), prof.reached_E) << q;
    EXPECT_EQ(std::vector<std::uint32_t>(sj.begin(), sj.end()), prof.reached_J) << q;
  }
}

TEST(RootProduct, Coefficients) {
  // (t - 0)(t - 1)(t - 2) = t^3 - 3t^2 + 2t
  const std::vector<std::uint32_t> roots{0, 1, 2};
  EXPECT_EQ(root_product(5, roots), (std::vector<std::uint32_t>{0, 2, 2, 1}));
  // prod_{s != r} (t - s) = (t^q - t) / (t - r) has degree q - 1.
  const auto a = annihilator_operator(7, 3);
  EXPECT_EQ(a.size(), 7u);
  EXPECT_EQ(a.back(), 1u);
  EXPECT_THROW(annihilator_operator(7, 7), UsageError);
}

TEST(BaseRelations, PartitionSideQ5) {
  const auto [b1, b2] = base_relations_E(5);
  EXPECT_EQ(b1.to_string(), "X3 + 2*X2 + 2*X1");
  EXPECT_EQ(b2.to_string(), "X1^2 + 3*X0*X2 + 2*X0*X1");
}

TEST(BaseRelations, DivisorSideQ5) {
  const auto [b3, b4] = base_relations_S(5);
  EXPECT_EQ(b3, P("4*X0^3 + 2*X0^2 + 3*X0*X1 + 3*X0 + 3*X1 + 4*X2"));
  EXPECT_EQ(b4, P("4*X0^2 + 3*X0 + 2*X1"));
}

unsigned weight_of(const Monomial& m) {
  unsigned w = 0;
  for (std::size_t k = 0; k < m.nvars(); ++k) w += static_cast<unsigned>(k) * m[k];
  return w;
}

TEST(BaseRelations, DivisorSideDegreeBounds) {
  for (std::uint32_t q : {5u, 7u, 11u, 13u}) {
    const auto [b3, b4] = base_relations_S(q);
    for (const auto& t : b3.terms()) {
      EXPECT_LE(t.mono.degree(), (q + 1) / 2);
      EXPECT_LE(weight_of(t.mono), (q - 1) / 2);
    }
    for (const auto& t : b4.terms()) {
      EXPECT_LE(t.mono.degree(), (q - 1) / 2);
      EXPECT_LE(weight_of(t.mono), (q - 3) / 2);
    }
  }
}

TEST(BaseRelations, VanishOnTheirSeries) {
  for (std::uint32_t q : {5u, 7u, 11u}) {
    const SeqModQ e = pentagonal_seq(q, 1500);
    const SeqModQ s = sigma_seq(q, 1500);
    for (const auto& b : build_beta(q, Side::kE)) {
      EXPECT_TRUE(evaluate_on_series(b, e).is_zero()) << q << ": " << b.to_string();
    }
    for (const auto& b : build_beta(q, Side::kS)) {
      EXPECT_TRUE(evaluate_on_series(b, s).is_zero()) << q << ": " << b.to_string();
    }
  }
}

TEST(EvaluateOnSeries, Generators) {
  const SeqModQ f = partition_seq(7, 50);
  EXPECT_EQ(evaluate_on_series(DiffPoly::variable(7, 0), f), f);
  EXPECT_EQ(evaluate_on_series(DiffPoly::variable(7, 2), f), derivation_power(f, 2));
  EXPECT_EQ(evaluate_on_series(DiffPoly::parse("X0^3", 7), f), self_convolve(f, 3));
  const SeqModQ one = evaluate_on_series(DiffPoly::constant(7, 3), f);
  EXPECT_EQ(one[0], 3u);
  EXPECT_TRUE(one.truncated(50).coeffs().size() == 50);
  EXPECT_THROW(evaluate_on_series(DiffPoly::variable(5, 0), f), UsageError);
}

TEST(CongruenceSpec, ValidationRules) {
  EXPECT_NO_THROW(CongruenceSpec::ramanujan(Series::kPartition, 5, 1, 4).validate());
  EXPECT_THROW(CongruenceSpec::ramanujan(Series::kPartition, 5, 10, 4).validate(), UsageError);
  EXPECT_THROW(CongruenceSpec::ramanujan(Series::kPartition, 5, 1, 5).validate(), UsageError);
  EXPECT_THROW(CongruenceSpec::ramanujan(Series::kPartition, 3, 1, 1).validate(), UsageError);
  EXPECT_THROW(CongruenceSpec::lincomb(Series::kDivisor, 5, 0, {1, 0, 0}).validate(), UsageError);
  EXPECT_THROW(CongruenceSpec::lincomb(Series::kDivisor, 5, 0, {0, 0, 0, 0}).validate(),
               UsageError);
  EXPECT_THROW(
      CongruenceSpec::weighted2(Series::kDivisor, 5, WeightPoly2::parse("a", 7)).validate(),
      UsageError);
  EXPECT_THROW(
      CongruenceSpec::weighted2(Series::kDivisor, 5, WeightPoly2::parse("a^5", 5)).validate(),
      UsageError);
}

TEST(CongruenceSpec, NormalizationAndRendering) {
  const auto s = CongruenceSpec::ramanujan(Series::kPartition, 5, -4, 4).normalized();
  EXPECT_EQ(s.k, 1);
  EXPECT_EQ(s.to_string(), "ramanujan partition q=5 k=1 r=4");
  EXPECT_EQ(CongruenceSpec::lincomb(Series::kDivisor, 5, 3, {0, 1, 4, 0}).to_string(),
            "lincomb divisor q=5 r=3 coeffs=0,1,4,0");
  EXPECT_EQ(CongruenceSpec::weighted2(Series::kDivisor, 5, WeightPoly2::parse("a^2+3ab+a", 5))
                .to_string(),
            "weighted divisor q=5 w=a^2 + 3ab + a");
}

TEST(Targets, RamanujanFirstCongruence) {
  const DiffPoly t = build_target(CongruenceSpec::ramanujan(Series::kPartition, 5, 1, 4));
  EXPECT_EQ(t, P("X0^3*X1 + 4*X0^3*X2 + X0^3*X3 + 4*X0^3*X4 + 2*X0^2*X1^2 + 4*X0^2*X1*X2 + "
                 "3*X0^2*X1*X3 + X0^2*X2^2 + X0*X1^3 + 4*X0*X1^2*X2 + 4*X1^4"));
}

TEST(Targets, ShiftingKByQGivesAnEquivalentSpec) {
  const auto a = CongruenceSpec::ramanujan(Series::kDivisor, 7, 2, 6);
  const auto b = CongruenceSpec::ramanujan(Series::kDivisor, 7, 9, 6);
  EXPECT_EQ(build_target(a), build_target(b));
}

TEST(Targets, DivisorWeightedIsTheWeightItself) {
  const auto spec =
      CongruenceSpec::weighted2(Series::kDivisor, 5, WeightPoly2::parse("a^2+3ab+a", 5));
  EXPECT_EQ(build_target(spec), P("X0*X2 + 3*X1^2 + X0*X1"));
}

TEST(Targets, WrongFamilyThrows) {
  const auto spec = CongruenceSpec::ramanujan(Series::kDivisor, 7, 2, 6);
  EXPECT_THROW(target_lincomb(spec), UsageError);
  EXPECT_THROW(target_weighted2(spec), UsageError);
}

TEST(SpecSequence, MatchesDefinitions) {
  const std::size_t n = 300;
  const SeqModQ s = sigma_seq(5, n);
  const auto lin = CongruenceSpec::lincomb(Series::kDivisor, 5, 3, {0, 1, 4, 0});
  EXPECT_EQ(spec_sequence(lin, n), add(self_convolve(s, 2), scale(self_convolve(s, 3), 4)));
  EXPECT_TRUE(check_spec(lin, 10000).holds);
  const auto ram = CongruenceSpec::ramanujan(Series::kPartition, 5, 1, 3);
  EXPECT_EQ(check_spec(ram, 1000).counterexample, 3u);
}

}  // namespace
}  // namespace diffcong
