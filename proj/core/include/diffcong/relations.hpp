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

// Base relations satisfied by the pentagonal series E (variables X_k =
// d^k E) and by the divisor series S (X_k = d^k S), and target relations
// encoding congruences. A sequence f satisfies f(qn + r) = 0 mod q for all
// n exactly when prod_{s != r} (d - s) kills its generating function.

#ifndef DIFFCONG_RELATIONS_HPP_
#define DIFFCONG_RELATIONS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffcong/diffpoly.hpp"
#include "diffcong/oracle.hpp"

namespace diffcong {

enum class Side { kE, kS };
enum class Series { kPartition, kDivisor };
enum class Family { kRamanujan, kLinComb, kWeighted2 };

// Partitions are handled in E, divisor sums in S.
Side side_of(Series series);

std::string_view to_string(Side side);
std::string_view to_string(Series series);
std::string_view to_string(Family family);
Side parse_side(std::string_view text);
Series parse_series(std::string_view text);
Family parse_family(std::string_view text);

struct ResidueProfile {
  std::uint32_t q = 0;
  // Sorted residues of the exponents carrying nonzero coefficients.
  std::vector<std::uint32_t> reached_E;
  std::vector<std::uint32_t> reached_J;
};

ResidueProfile residue_profile(std::uint32_t q);

// (B1, B2): B1 = prod_{r in reached_E} (d - r) X_0 and B2 is
// prod_{s in reached_J} (d - s) X_0^3 with the common factor removed.
std::pair<DiffPoly, DiffPoly> base_relations_E(std::uint32_t q);

// (B3, B4): the same relations rewritten in S = -dE / E. With
// prod_{r in reached_E} (t - r) = sum c_j t^j, B3 = sum c_j (d - S)^{j-1}(-S);
// B4 uses reached_J and (d - 3S)^{j-1}(-3S).
std::pair<DiffPoly, DiffPoly> base_relations_S(std::uint32_t q);

// Coefficients of prod_{s != r} (t - s), index = power of t.
std::vector<std::uint32_t> annihilator_operator(std::uint32_t q, std::uint32_t r);

// Coefficients of prod_{s in roots} (t - s), index = power of t.
std::vector<std::uint32_t> root_product(std::uint32_t q, std::span<const std::uint32_t> roots);

// prod_{s in roots} (d - s) applied to p, one factor at a time in the
// order given.
DiffPoly apply_root_product(std::span<const std::uint32_t> roots, DiffPoly p);

// prod_{s != r} (d - s) p, factors in ascending s.
DiffPoly apply_annihilator(std::uint32_t r, const DiffPoly& p);

struct CongruenceSpec {
  Family family = Family::kRamanujan;
  Series series = Series::kPartition;
  std::uint32_t q = 5;
  // Ramanujan exponent; any integer not divisible by q.
  std::int64_t k = 1;
  std::uint32_t r = 0;
  // Lincomb coefficients c_1..c_{q-1}.
  std::vector<std::uint32_t> coeffs;
  std::optional<WeightPoly2> weight;

  static CongruenceSpec ramanujan(Series series, std::uint32_t q, std::int64_t k, std::uint32_t r);
  static CongruenceSpec lincomb(Series series, std::uint32_t q, std::uint32_t r,
                                std::vector<std::uint32_t> coeffs);
  static CongruenceSpec weighted2(Series series, std::uint32_t q, WeightPoly2 weight);

  Side side() const { return side_of(series); }

  // Throws UsageError when the spec cannot be turned into a target.
  void validate() const;
  // Validated copy with k reduced into [1, q-1] and coefficients into [0, q).
  CongruenceSpec normalized() const;

  // "ramanujan partition q=5 k=1 r=4".
  std::string to_string() const;

  friend bool operator==(const CongruenceSpec&, const CongruenceSpec&) = default;
};

DiffPoly target_ramanujan(const CongruenceSpec& spec);
DiffPoly target_lincomb(const CongruenceSpec& spec);
DiffPoly target_weighted2(const CongruenceSpec& spec);
DiffPoly build_target(const CongruenceSpec& spec);

// Substitutes X_k -> (n -> n^k f(n)) and multiplies by convolution.
SeqModQ evaluate_on_series(const DiffPoly& p, const SeqModQ& f);

// The oracle sequence whose convolutions a spec talks about: p(n) or
// sigma(n), length `length`.
SeqModQ base_sequence(Series series, std::uint32_t q, std::size_t length);

// Oracle-side value of the congruence's left-hand side at every index.
// Ramanujan and lincomb specs vanish on indices = r mod q; weighted specs
// vanish everywhere.
SeqModQ spec_sequence(const CongruenceSpec& spec, std::size_t length);

// Direct numerical check of a spec up to index `bound`.
CongruenceCheck check_spec(const CongruenceSpec& spec, std::size_t bound);

}  // namespace diffcong

#endif  // DIFFCONG_RELATIONS_HPP_
