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

// Brute-force number theory over GF(q): truncated coefficient sequences of
// the partition, divisor and related generating functions, their
// convolutions, and direct congruence checks. Nothing here touches the
// polynomial machinery, so it serves as the independent ground truth.

#ifndef DIFFCONG_ORACLE_HPP_
#define DIFFCONG_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diffcong/fq.hpp"

namespace diffcong {

// A power series truncated to `size()` coefficients, reduced mod q.
class SeqModQ {
 public:
  SeqModQ(std::uint32_t q, std::size_t length);
  SeqModQ(std::uint32_t q, std::vector<std::uint32_t> coeffs);

  std::uint32_t modulus() const { return q_; }
  std::size_t size() const { return coeffs_.size(); }
  std::uint32_t operator[](std::size_t n) const { return coeffs_[n]; }
  FqElem at(std::size_t n) const { return FqElem(coeffs_.at(n), q_); }
  void set(std::size_t n, std::uint32_t value) { coeffs_.at(n) = value % q_; }
  std::span<const std::uint32_t> coeffs() const { return coeffs_; }
  bool is_zero() const;

  SeqModQ truncated(std::size_t length) const;

  friend bool operator==(const SeqModQ&, const SeqModQ&) = default;

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> coeffs_;
};

enum class SigmaVariant { kAll, kOdd, kEven, kCubes };

// One monomial c * a^i * b^j of a two-variable weight.
struct WeightTerm {
  unsigned a_exp = 0;
  unsigned b_exp = 0;
  std::uint32_t coeff = 0;
  friend bool operator==(const WeightTerm&, const WeightTerm&) = default;
};

// Weight polynomial w(a, b) for two-fold weighted convolutions. Terms are
// kept canonical: a-exponent >= b-exponent (the convolution is symmetric,
// so a^j b^i is folded onto a^i b^j), no zero coefficients, no duplicates,
// sorted by total degree then a-exponent, both descending.
class WeightPoly2 {
 public:
  WeightPoly2(std::uint32_t q, std::vector<WeightTerm> terms);

  // Grammar: terms separated by '+', each `[coeff][a[^e]][b[^e]]`, implicit
  // coefficient and exponent 1, whitespace ignored. "a^2+3ab+a".
  static WeightPoly2 parse(std::string_view text, std::uint32_t q);

  std::uint32_t modulus() const { return q_; }
  std::span<const WeightTerm> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  unsigned max_exponent() const;

  // Evaluates w(a, b) mod q at integer arguments.
  std::uint32_t evaluate(std::uint64_t a, std::uint64_t b) const;

  std::string to_string() const;

  friend bool operator==(const WeightPoly2&, const WeightPoly2&) = default;

 private:
  std::uint32_t q_;
  std::vector<WeightTerm> terms_;
};

// Coefficients p(n) mod q from the pentagonal-number recurrence.
SeqModQ partition_seq(std::uint32_t q, std::size_t length);

// sigma variants mod q from a divisor sieve; coeffs[0] = 0.
SeqModQ sigma_seq(std::uint32_t q, std::size_t length, SigmaVariant variant = SigmaVariant::kAll);

// E(X) = sum (-1)^n X^{n(3n+1)/2} over all integers n.
SeqModQ pentagonal_seq(std::uint32_t q, std::size_t length);

// J(X) = sum_{n>=0} (-1)^n (2n+1) X^{n(n+1)/2}.
SeqModQ jacobi_seq(std::uint32_t q, std::size_t length);

// The derivation X d/dX: multiplies coefficient n by n.
SeqModQ derivation(const SeqModQ& a);

// Multiplies coefficient n by (n mod q)^k.
SeqModQ derivation_power(const SeqModQ& a, unsigned k);

SeqModQ add(const SeqModQ& a, const SeqModQ& b);
SeqModQ scale(const SeqModQ& a, std::uint32_t c);

// Truncated Cauchy product; the result has min(a.size(), b.size()) terms.
SeqModQ convolve(const SeqModQ& a, const SeqModQ& b);

// k-fold convolution power, k >= 1.
SeqModQ self_convolve(const SeqModQ& a, unsigned k);

// All powers a^{*1} .. a^{*max_k}, index 0 holding a itself.
std::vector<SeqModQ> self_convolution_powers(const SeqModQ& a, unsigned max_k);

// coeffs[n] = sum_{i+j=n} w(i, j) a[i] b[j]. Each monomial of w is
// evaluated literally on the ordered pair (i, j).
SeqModQ weighted_convolve2(const SeqModQ& a, const SeqModQ& b, const WeightPoly2& w);

// Convolution inverse of n -> sigma(n+1), by forward substitution.
SeqModQ sigma_inv_seq(std::uint32_t q, std::size_t length);

struct CongruenceCheck {
  bool holds = true;
  // Smallest index n = q*m + r with seq[n] != 0, when !holds.
  std::optional<std::size_t> counterexample;
};

// seq[q*m + r] == 0 for every index below seq.size().
CongruenceCheck check_congruence(const SeqModQ& seq, std::uint32_t r);

// seq[n] == 0 for every n.
CongruenceCheck check_vanishes(const SeqModQ& seq);

// Exact integer divisor sums sigma_variant(n) for n < length.
std::vector<std::int64_t> sigma_exact(std::size_t length, SigmaVariant variant);

struct DivisorCheckItem {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct DivisorCheckReport {
  std::size_t bound = 0;
  std::vector<DivisorCheckItem> items;
  bool all_passed() const;
};

// Numerical checks of the divisor-function identities and congruences
// (items a..g) up to index bound N >= 100.
DivisorCheckReport verify_section5(std::size_t bound);

}  // namespace diffcong

#endif  // DIFFCONG_ORACLE_HPP_
