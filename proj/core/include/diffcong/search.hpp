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

// Numerical discovery of candidate congruences from the oracle sequences.
// Every reported candidate has been checked against all indices <= bound.

#ifndef DIFFCONG_SEARCH_HPP_
#define DIFFCONG_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "diffcong/linalg.hpp"
#include "diffcong/oracle.hpp"
#include "diffcong/relations.hpp"

namespace diffcong {

inline constexpr std::size_t kDefaultBound = 10000;

struct RamanujanPair {
  unsigned k = 0;
  std::uint32_t r = 0;
  friend auto operator<=>(const RamanujanPair&, const RamanujanPair&) = default;
};

// All (k, r), 1 <= k <= q-1, with f^{*k}(qn + r) = 0 mod q for qn + r <= bound.
std::vector<RamanujanPair> search_ramanujan(std::uint32_t q, Series series,
                                            std::size_t bound = kDefaultBound);

struct LinCombBasis {
  std::uint32_t q = 0;
  std::uint32_t r = 0;
  Series series = Series::kDivisor;
  // RREF rows (c_1, ..., c_{q-1}).
  std::vector<linalg::Vector> rows;
};

// Basis of {c : sum_k c_k f^{*k}(qn + r) = 0 mod q for qn + r <= bound}.
LinCombBasis search_lincomb(std::uint32_t q, std::uint32_t r, Series series,
                            std::size_t bound = kDefaultBound);

// Weight monomials a^i b^j, 0 <= j <= i <= q-1, in table order: total
// degree descending, then a-exponent descending.
std::vector<WeightTerm> weight_monomials(std::uint32_t q);

// Weights w with at most max_terms monomials such that the w-weighted
// two-fold convolution of f vanishes mod q at every index <= bound, up to
// scaling (first coefficient 1 in table order). max_terms = 0 means q-2.
std::vector<WeightPoly2> search_weighted2(std::uint32_t q, Series series, unsigned max_terms = 0,
                                          std::size_t bound = kDefaultBound);

// Dimension of the space of all valid weights (no sparsity limit).
std::size_t weighted2_nullity(std::uint32_t q, Series series, std::size_t bound = kDefaultBound);

}  // namespace diffcong

#endif  // DIFFCONG_SEARCH_HPP_
