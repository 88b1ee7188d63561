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

#include "diffcong/search.hpp"

#include <algorithm>
#include <optional>

namespace diffcong {

std::vector<RamanujanPair> search_ramanujan(std::uint32_t q, Series series, std::size_t bound) {
  require_supported_prime(q);
  const SeqModQ f = base_sequence(series, q, bound + 1);
  const auto powers = self_convolution_powers(f, q - 1);
  std::vector<RamanujanPair> out;
  for (unsigned k = 1; k < q; ++k) {
    for (std::uint32_t r = 0; r < q; ++r) {
      if (check_congruence(powers[k - 1], r).holds) out.push_back({k, r});
    }
  }
  return out;
}

namespace {

// Null space of a tall matrix given column-wise, built from a row sample
// and grown by every row that one of its basis vectors fails on.
class SampledNullspace {
 public:
  SampledNullspace(std::vector<const SeqModQ*> columns, std::vector<std::size_t> row_indices,
                   const PrimeField& field)
      : columns_(std::move(columns)), rows_(std::move(row_indices)), field_(field) {}

  linalg::Matrix solve() {
    const std::size_t ncols = columns_.size();
    linalg::Matrix sample(ncols);
    std::vector<bool> used(rows_.size(), false);
    const std::size_t initial = std::min(rows_.size(), 4 * ncols);
    for (std::size_t i = 0; i < initial; ++i) {
      sample.append_row(row(rows_[i]));
      used[i] = true;
    }
    while (true) {
      linalg::Matrix basis = linalg::nullspace(sample, field_);
      bool grew = false;
      for (std::size_t b = 0; b < basis.rows(); ++b) {
        if (auto bad = first_violation(basis.row(b))) {
          if (!used[*bad]) {
            sample.append_row(row(rows_[*bad]));
            used[*bad] = true;
            grew = true;
          }
        }
      }
      if (!grew) return basis;
    }
  }

 private:
  linalg::Vector row(std::size_t n) const {
    linalg::Vector v(columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c) v[c] = (*columns_[c])[n];
    return v;
  }

  // Position in rows_ of the first row where v fails.
  std::optional<std::size_t> first_violation(std::span<const std::uint32_t> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        acc += static_cast<std::uint64_t>(v[c]) * (*columns_[c])[rows_[i]];
        if ((c & 0xFF) == 0xFF) acc %= field_.modulus();
      }
      if (acc % field_.modulus() != 0) return i;
    }
    return std::nullopt;
  }

  std::vector<const SeqModQ*> columns_;
  std::vector<std::size_t> rows_;
  const PrimeField& field_;
};

}  // namespace

LinCombBasis search_lincomb(std::uint32_t q, std::uint32_t r, Series series, std::size_t bound) {
  require_supported_prime(q);
  if (r >= q) throw UsageError("residue must lie in [0, q)");
  const PrimeField& field = prime_field(q);
  const SeqModQ f = base_sequence(series, q, bound + 1);
  const auto powers = self_convolution_powers(f, q - 1);
  std::vector<const SeqModQ*> cols;
  for (const auto& p : powers) cols.push_back(&p);
  std::vector<std::size_t> rows;
  for (std::size_t n = r; n <= bound; n += q) rows.push_back(n);

  SampledNullspace ns(std::move(cols), std::move(rows), field);
  LinCombBasis out{q, r, series, ns.solve().to_rows()};
  return out;
}

std::vector<WeightTerm> weight_monomials(std::uint32_t q) {
  std::vector<WeightTerm> mons;
  for (unsigned i = 0; i < q; ++i) {
    for (unsigned j = 0; j <= i; ++j) mons.push_back({i, j, 1});
  }
  std::sort(mons.begin(), mons.end(), [](const WeightTerm& x, const WeightTerm& y) {
    const unsigned dx = x.a_exp + x.b_exp, dy = y.a_exp + y.b_exp;
    if (dx != dy) return dx > dy;
    return x.a_exp > y.a_exp;
  });
  return mons;
}

namespace {

struct WeightedSystem {
  std::vector<WeightTerm> monomials;
  std::vector<SeqModQ> columns;
  linalg::Matrix kernel{0};
};

WeightedSystem weighted_system(std::uint32_t q, Series series, std::size_t bound) {
  require_supported_prime(q);
  const PrimeField& field = prime_field(q);
  WeightedSystem sys;
  sys.monomials = weight_monomials(q);
  const SeqModQ f = base_sequence(series, q, bound + 1);
  std::vector<SeqModQ> derived;
  for (unsigned i = 0; i < q; ++i) derived.push_back(derivation_power(f, i));
  // Columns are sums over ordered pairs (i, j); a^i b^j and a^j b^i give
  // the same column, which is why only i >= j is listed.
  for (const auto& m : sys.monomials)
    sys.columns.push_back(convolve(derived[m.a_exp], derived[m.b_exp]));

  std::vector<const SeqModQ*> cols;
  for (const auto& c : sys.columns) cols.push_back(&c);
  std::vector<std::size_t> rows(bound + 1);
  for (std::size_t n = 0; n <= bound; ++n) rows[n] = n;
  SampledNullspace ns(std::move(cols), std::move(rows), field);
  sys.kernel = ns.solve();
  return sys;
}

// Calls fn(subset) for every subset of {0..n-1} of size 1..max_size, in
// lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t max_size, Fn&& fn) {
  std::vector<std::size_t> idx;
  // Depth-first: extend, or advance the last index, or backtrack.
  std::size_t next = 0;
  while (true) {
    if (idx.size() < max_size && next < n) {
      idx.push_back(next);
      fn(std::span<const std::size_t>(idx));
      next = idx.back() + 1;
      continue;
    }
    if (idx.empty()) return;
    next = idx.back() + 1;
    idx.pop_back();
  }
}

}  // namespace

std::size_t weighted2_nullity(std::uint32_t q, Series series, std::size_t bound) {
  return weighted_system(q, series, bound).kernel.rows();
}

std::vector<WeightPoly2> search_weighted2(std::uint32_t q, Series series, unsigned max_terms,
                                          std::size_t bound) {
  if (max_terms == 0) max_terms = q - 2;
  const PrimeField& field = prime_field(q);
  const WeightedSystem sys = weighted_system(q, series, bound);
  const std::size_t ncols = sys.monomials.size();
  if (sys.kernel.rows() == 0) return {};

  // Valid weights are exactly the solutions of h x = 0.
  linalg::Matrix h = linalg::nullspace(sys.kernel, field);
  if (h.rows() == 0) h = linalg::Matrix(1, ncols);

  struct Hit {
    std::vector<std::size_t> support;
    linalg::Vector coeffs;
  };
  std::vector<Hit> hits;
  for_each_subset(ncols, max_terms, [&](std::span<const std::size_t> support) {
    const linalg::Matrix local = linalg::nullspace(h.select_columns(support), field);
    const std::size_t dim = local.rows();
    if (dim == 0) return;
    // Enumerate the local kernel up to scaling; almost always dim == 1.
    std::vector<std::uint32_t> mix(dim, 0);
    std::uint64_t total = 1;
    for (std::size_t d = 0; d < dim; ++d) total *= q;
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t d = 0; d < dim; ++d) {
        mix[d] = static_cast<std::uint32_t>(c % q);
        c /= q;
      }
      linalg::Vector v(support.size(), 0);
      for (std::size_t d = 0; d < dim; ++d) {
        if (mix[d] == 0) continue;
        for (std::size_t s = 0; s < support.size(); ++s) {
          v[s] = field.add(v[s], field.mul(mix[d], local(d, s)));
        }
      }
      if (v[0] != 1) continue;
      if (std::any_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; })) continue;
      hits.push_back({{support.begin(), support.end()}, std::move(v)});
    }
  });

  const SeqModQ f = base_sequence(series, q, bound + 1);
  std::vector<WeightPoly2> out;
  for (const Hit& hit : hits) {
    std::vector<WeightTerm> terms;
    for (std::size_t s = 0; s < hit.support.size(); ++s) {
      const WeightTerm& m = sys.monomials[hit.support[s]];
      terms.push_back({m.a_exp, m.b_exp, hit.coeffs[s]});
    }
    WeightPoly2 w(q, std::move(terms));
    // Final check against every index, independent of the linear algebra.
    if (!check_vanishes(weighted_convolve2(f, f, w)).holds) continue;
    out.push_back(std::move(w));
  }
  std::stable_sort(out.begin(), out.end(), [](const WeightPoly2& x, const WeightPoly2& y) {
    const WeightTerm& a = x.terms().front();
    const WeightTerm& b = y.terms().front();
    const unsigned da = a.a_exp + a.b_exp, db = b.a_exp + b.b_exp;
    if (da != db) return da < db;
    return a.a_exp < b.a_exp;
  });
  return out;
}

}  // namespace diffcong
