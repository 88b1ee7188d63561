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

#include "diffcong/oracle.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace diffcong {
namespace {

using testing::naive_convolve;
using testing::naive_partitions;
using testing::naive_sigma;

std::vector<std::uint32_t> as_vector(const SeqModQ& s) {
  return {s.coeffs().begin(), s.coeffs().end()};
}

TEST(SeqModQ, ConstructionAndReduction) {
  const SeqModQ s(5, {7, 10, 3});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], 2u);
  EXPECT_EQ(s[1], 0u);
  EXPECT_FALSE(s.is_zero());
  EXPECT_TRUE(SeqModQ(5, 4).is_zero());
  EXPECT_EQ(s.truncated(2).size(), 2u);
  EXPECT_THROW(SeqModQ(5, std::size_t{0}), UsageError);
  EXPECT_THROW(SeqModQ(6, 3), UsageError);
}

TEST(PartitionSeq, FirstValuesExact) {
  const auto exact = testing::exact_partitions(30);
  EXPECT_EQ(exact[8], 22u);
  EXPECT_EQ(exact[10], 42u);
  EXPECT_EQ(exact[24], 1575u);
  const SeqModQ p = partition_seq(1000003, 30);
  for (std::size_t n = 0; n < 30; ++n) EXPECT_EQ(p[n], exact[n]) << n;
}

TEST(PartitionSeq, MatchesPartsDynamicProgram) {
  for (std::uint32_t q : {5u, 7u, 11u, 13u}) {
    EXPECT_EQ(as_vector(partition_seq(q, 600)), naive_partitions(q, 600)) << q;
  }
}

TEST(SigmaSeq, MatchesTrialDivision) {
  const std::uint32_t q = 1000003;
  const SeqModQ all = sigma_seq(q, 300);
  const SeqModQ odd = sigma_seq(q, 300, SigmaVariant::kOdd);
  const SeqModQ even = sigma_seq(q, 300, SigmaVariant::kEven);
  const SeqModQ cubes = sigma_seq(q, 300, SigmaVariant::kCubes);
  EXPECT_EQ(all[0], 0u);
  for (std::uint64_t n = 1; n < 300; ++n) {
    EXPECT_EQ(all[n], naive_sigma(n) % q) << n;
    EXPECT_EQ(odd[n], naive_sigma(n, 1, 1) % q) << n;
    EXPECT_EQ(even[n], naive_sigma(n, 1, 2) % q) << n;
    EXPECT_EQ(cubes[n], naive_sigma(n, 3) % q) << n;
  }
}

TEST(SigmaExact, SmallValues) {
  const auto s = sigma_exact(13, SigmaVariant::kAll);
  EXPECT_EQ(s[1], 1);
  EXPECT_EQ(s[6], 12);
  EXPECT_EQ(s[12], 28);
  const auto c = sigma_exact(5, SigmaVariant::kCubes);
  EXPECT_EQ(c[4], 73);
}

TEST(PentagonalSeq, Coefficients) {
  // E = 1 - X - X^2 + X^5 + X^7 - X^12 - X^15 + ...
  const SeqModQ e = pentagonal_seq(7, 16);
  const std::vector<std::uint32_t> expected{1, 6, 6, 0, 0, 1, 0, 1, 0, 0, 0, 0, 6, 0, 0, 6};
  EXPECT_EQ(as_vector(e), expected);
}

TEST(JacobiSeq, Coefficients) {
  // J = sum (-1)^n (2n+1) X^{n(n+1)/2}.
  const SeqModQ j = jacobi_seq(101, 11);
  const std::vector<std::uint32_t> expected{1, 98, 0, 5, 0, 0, 94, 0, 0, 0, 9};
  EXPECT_EQ(as_vector(j), expected);
}

TEST(Derivation, MultipliesByIndexPower) {
  const SeqModQ a(7, {1, 1, 1, 1, 1, 1, 1, 1, 1});
  EXPECT_EQ(as_vector(derivation(a)), (std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 0, 1}));
  EXPECT_EQ(as_vector(derivation_power(a, 2)),
            (std::vector<std::uint32_t>{0, 1, 4, 2, 2, 4, 1, 0, 1}));
  EXPECT_EQ(derivation_power(a, 0), a);
}

TEST(AddScale, Pointwise) {
  const SeqModQ a(5, {1, 2, 3}), b(5, {4, 4, 4, 4});
  EXPECT_EQ(as_vector(add(a, b)), (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(as_vector(scale(a, 3)), (std::vector<std::uint32_t>{3, 1, 4}));
  EXPECT_THROW(add(a, SeqModQ(7, 3)), UsageError);
}

TEST(Convolve, MatchesSchoolbook) {
  testing::Rng rng(11);
  for (std::uint32_t q : {5u, 13u, 65521u, 4294967291u}) {
    std::vector<std::uint32_t> x(257), y(257);
    for (auto& v : x) v = testing::uniform(rng, 0, q - 1);
    for (auto& v : y) v = testing::uniform(rng, 0, q - 1);
    EXPECT_EQ(as_vector(convolve(SeqModQ(q, x), SeqModQ(q, y))), naive_convolve(x, y, q)) << q;
  }
}

TEST(Convolve, TruncatesToShorterInput) {
  EXPECT_EQ(convolve(SeqModQ(5, 10), SeqModQ(5, 4)).size(), 4u);
}

TEST(SelfConvolve, PowersAgree) {
  const SeqModQ p = partition_seq(11, 200);
  const auto powers = self_convolution_powers(p, 10);
  ASSERT_EQ(powers.size(), 10u);
  for (unsigned k = 1; k <= 10; ++k) EXPECT_EQ(self_convolve(p, k), powers[k - 1]) << k;
  EXPECT_THROW(self_convolve(p, 0), UsageError);
  EXPECT_TRUE(self_convolution_powers(p, 0).empty());
}

TEST(WeightPoly2, ParseAndRender) {
  const WeightPoly2 w = WeightPoly2::parse("a^2+3ab+a", 5);
  EXPECT_EQ(w.to_string(), "a^2 + 3ab + a");
  EXPECT_EQ(w.terms().size(), 3u);
  EXPECT_EQ(w.max_exponent(), 2u);
  EXPECT_EQ(WeightPoly2::parse(" a^6b^2 + 6a^5b^3 +4a^4b^4+3ab ", 7).to_string(),
            "a^6b^2 + 6a^5b^3 + 4a^4b^4 + 3ab");
  EXPECT_EQ(WeightPoly2::parse("2", 5).to_string(), "2");
  EXPECT_EQ(WeightPoly2::parse("b^2", 5).to_string(), "a^2");
}

TEST(WeightPoly2, CanonicalFormFoldsAndMerges) {
  // b a^2 folds onto a^2 b; 3ab + 2ab = 0 vanishes.
  const WeightPoly2 w = WeightPoly2::parse("ab^2 + a^2b + 3ab + 2ab", 5);
  EXPECT_EQ(w.to_string(), "2a^2b");
  EXPECT_EQ(WeightPoly2::parse("a^2 + 4a^2", 5).empty(), true);
}

TEST(WeightPoly2, RejectsMalformed) {
  for (const char* bad : {"", "a^", "a+", "+a", "ab^x", "c", "a b2", "a^^2", "3*"}) {
    EXPECT_THROW(WeightPoly2::parse(bad, 5), UsageError) << bad;
  }
}

TEST(WeightPoly2, Evaluate) {
  const WeightPoly2 w = WeightPoly2::parse("a^2+3ab+a", 5);
  EXPECT_EQ(w.evaluate(2, 1), (4 + 6 + 2) % 5);
  EXPECT_EQ(w.evaluate(0, 0), 0u);
}

TEST(WeightedConvolve2, MatchesDirectSum) {
  const std::uint32_t q = 7;
  const SeqModQ f = sigma_seq(q, 120);
  const WeightPoly2 w = WeightPoly2::parse("a^6b^2+6a^5b^3+4a^4b^4+3ab+2a+5", q);
  const SeqModQ got = weighted_convolve2(f, f, w);
  for (std::size_t n = 0; n < 120; ++n) {
    std::uint64_t s = 0;
    // Ordered pairs; the symmetric fold does not change the sum.
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t j = n - i;
      std::uint64_t wij = 0;
      for (const char* raw : {"a^6b^2", "6a^5b^3", "4a^4b^4", "3ab", "2a", "5"}) {
        wij += WeightPoly2::parse(raw, q).evaluate(i, j);
      }
      s += (wij % q) * f[i] % q * f[j];
    }
    EXPECT_EQ(got[n], s % q) << n;
  }
}

TEST(CheckCongruence, FindsSmallestCounterexample) {
  const SeqModQ p = partition_seq(5, 200);
  const CongruenceCheck ok = check_congruence(p, 4);
  EXPECT_TRUE(ok.holds);
  EXPECT_FALSE(ok.counterexample.has_value());
  const CongruenceCheck bad = check_congruence(p, 3);
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.counterexample, 3u);  // p(3) = 3
  EXPECT_THROW(check_congruence(p, 5), UsageError);
  EXPECT_TRUE(check_vanishes(SeqModQ(5, 4)).holds);
  EXPECT_EQ(check_vanishes(SeqModQ(5, {0, 0, 1})).counterexample, 2u);
}

TEST(RamanujanClassics, OracleLevel) {
  EXPECT_TRUE(check_congruence(partition_seq(5, 10001), 4).holds);
  EXPECT_TRUE(check_congruence(partition_seq(7, 10001), 5).holds);
  EXPECT_TRUE(check_congruence(partition_seq(11, 10001), 6).holds);
  // p(8) = 22 is not divisible by 5.
  EXPECT_EQ(partition_seq(5, 9)[8], 2u);
}

TEST(SigmaInv, InvertsShiftedSigma) {
  const std::uint32_t q = 5;
  const SeqModQ inv = sigma_inv_seq(q, 400);
  std::vector<std::uint32_t> shifted(400);
  const SeqModQ s = sigma_seq(q, 401);
  for (std::size_t n = 0; n < 400; ++n) shifted[n] = s[n + 1];
  const SeqModQ product = convolve(SeqModQ(q, shifted), inv);
  EXPECT_EQ(product[0], 1u);
  for (std::size_t n = 1; n < 400; ++n) EXPECT_EQ(product[n], 0u) << n;
}

TEST(SigmaInv, VanishesOffMultiplesOfFive) {
  const SeqModQ inv = sigma_inv_seq(5, 3001);
  EXPECT_EQ(inv[0], 1u);
  EXPECT_NE(inv[1], 0u);
  for (std::size_t n = 2; n <= 3000; ++n) {
    if (n % 5 != 0) EXPECT_EQ(inv[n], 0u) << n;
  }
}

TEST(DivisorChecks, AllItemsPassAtDefaultBound) {
  const DivisorCheckReport report = verify_section5(10000);
  ASSERT_EQ(report.items.size(), 8u);
  for (const auto& item : report.items) EXPECT_TRUE(item.passed) << item.id << ": " << item.detail;
  EXPECT_TRUE(report.all_passed());
  const auto e = std::find_if(report.items.begin(), report.items.end(),
                              [](const DivisorCheckItem& i) { return i.id == "e"; });
  ASSERT_NE(e, report.items.end());
  EXPECT_NE(e->detail.find("0,1,1,0,3"), std::string::npos) << e->detail;
}

TEST(DivisorChecks, RejectsTinyBound) { EXPECT_THROW(verify_section5(50), UsageError); }

TEST(DivisorChecks, ExactOddSquareIdentity) {
  // 24 sigma_odd^{*2}(n) = 11 sigma_3(n) - sigma_3(2n) - 2 sigma_odd(n), brute force.
  for (std::uint64_t n = 1; n <= 150; ++n) {
    std::int64_t conv = 0;
    for (std::uint64_t a = 1; a < n; ++a) {
      conv += static_cast<std::int64_t>(naive_sigma(a, 1, 1) * naive_sigma(n - a, 1, 1));
    }
    const auto rhs = 11 * static_cast<std::int64_t>(naive_sigma(n, 3)) -
                     static_cast<std::int64_t>(naive_sigma(2 * n, 3)) -
                     2 * static_cast<std::int64_t>(naive_sigma(n, 1, 1));
    EXPECT_EQ(24 * conv, rhs) << n;
  }
}

}  // namespace
}  // namespace diffcong
