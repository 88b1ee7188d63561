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

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace diffcong {

Side side_of(Series series) { return series == Series::kPartition ? Side::kE : Side::kS; }

std::string_view to_string(Side side) { return side == Side::kE ? "E" : "S"; }

std::string_view to_string(Series series) {
  return series == Series::kPartition ? "partition" : "divisor";
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kRamanujan: return "ramanujan";
    case Family::kLinComb: return "lincomb";
    case Family::kWeighted2: return "weighted";
  }
  return "?";
}

Side parse_side(std::string_view text) {
  if (text == "E" || text == "e") return Side::kE;
  if (text == "S" || text == "s") return Side::kS;
  throw UsageError("side must be E or S, got '" + std::string(text) + "'");
}

Series parse_series(std::string_view text) {
  if (text == "partition") return Series::kPartition;
  if (text == "divisor") return Series::kDivisor;
  throw UsageError("series must be partition or divisor, got '" + std::string(text) + "'");
}

Family parse_family(std::string_view text) {
  if (text == "ramanujan") return Family::kRamanujan;
  if (text == "lincomb") return Family::kLinComb;
  if (text == "weighted" || text == "weighted2") return Family::kWeighted2;
  throw UsageError("unknown congruence family '" + std::string(text) + "'");
}

ResidueProfile residue_profile(std::uint32_t q) {
  require_supported_prime(q);
  std::set<std::uint32_t> e, j;
  for (std::uint64_t n = 0; n < q; ++n) {
    e.insert(static_cast<std::uint32_t>(n * (3 * n + 1) / 2 % q));
    e.insert(static_cast<std::uint32_t>(n * (3 * n - 1) / 2 % q));
    // The coefficient 2n+1 vanishes mod q for one class of n.
    if ((2 * n + 1) % q != 0) j.insert(static_cast<std::uint32_t>(n * (n + 1) / 2 % q));
  }
  return {q, {e.begin(), e.end()}, {j.begin(), j.end()}};
}

std::vector<std::uint32_t> root_product(std::uint32_t q, std::span<const std::uint32_t> roots) {
  const PrimeField& field = prime_field(q);
  std::vector<std::uint32_t> c{1};
  for (std::uint32_t s : roots) {
    // c(t) * (t - s)
    std::vector<std::uint32_t> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], c[i]);
      next[i] = field.sub(next[i], field.mul(c[i], s % q));
    }
    c = std::move(next);
  }
  return c;
}

std::vector<std::uint32_t> annihilator_operator(std::uint32_t q, std::uint32_t r) {
  require_supported_prime(q);
  if (r >= q) throw UsageError("residue must lie in [0, q)");
  std::vector<std::uint32_t> roots;
  for (std::uint32_t s = 0; s < q; ++s) {
    if (s != r) roots.push_back(s);
  }
  return root_product(q, roots);
}

DiffPoly apply_root_product(std::span<const std::uint32_t> roots, DiffPoly p) {
  for (std::uint32_t s : roots) p = derive(p) - p.scale(s);
  return p;
}

DiffPoly apply_annihilator(std::uint32_t r, const DiffPoly& p) {
  const std::uint32_t q = p.modulus();
  if (r >= q) throw UsageError("residue must lie in [0, q)");
  std::vector<std::uint32_t> roots;
  for (std::uint32_t s = 0; s < q; ++s) {
    if (s != r) roots.push_back(s);
  }
  return apply_root_product(roots, p);
}

std::pair<DiffPoly, DiffPoly> base_relations_E(std::uint32_t q) {
  const ResidueProfile prof = residue_profile(q);
  DiffPoly b1 = apply_root_product(prof.reached_E, DiffPoly::variable(q, 0));
  DiffPoly b2 =
      strip_common_factor(apply_root_product(prof.reached_J, DiffPoly::variable(q, 0, 3))).first;
  return {std::move(b1), std::move(b2)};
}

namespace {

// sum_{j>=1} c_j v_j with v_1 = kS, v_{j+1} = d v_j + kS v_j.
DiffPoly affine_expansion(std::uint32_t q, std::span<const std::uint32_t> c, std::int64_t k) {
  const DiffPoly ks = DiffPoly::from_term(q, Monomial::variable(q, 0), k);
  DiffPoly v = ks;
  DiffPoly total(q);
  for (std::size_t j = 1; j < c.size(); ++j) {
    total += v.scale(c[j]);
    if (j + 1 < c.size()) v = derive(v) + ks * v;
  }
  return total;
}

}  // namespace

std::pair<DiffPoly, DiffPoly> base_relations_S(std::uint32_t q) {
  const ResidueProfile prof = residue_profile(q);
  const auto c = root_product(q, prof.reached_E);
  const auto d = root_product(q, prof.reached_J);
  return {affine_expansion(q, c, -1), affine_expansion(q, d, -3)};
}

// ---------------------------------------------------------------------------

CongruenceSpec CongruenceSpec::ramanujan(Series series, std::uint32_t q, std::int64_t k,
                                         std::uint32_t r) {
  CongruenceSpec s;
  s.family = Family::kRamanujan;
  s.series = series;
  s.q = q;
  s.k = k;
  s.r = r;
  return s;
}

CongruenceSpec CongruenceSpec::lincomb(Series series, std::uint32_t q, std::uint32_t r,
                                       std::vector<std::uint32_t> coeffs) {
  CongruenceSpec s;
  s.family = Family::kLinComb;
  s.series = series;
  s.q = q;
  s.k = 0;
  s.r = r;
  s.coeffs = std::move(coeffs);
  return s;
}

CongruenceSpec CongruenceSpec::weighted2(Series series, std::uint32_t q, WeightPoly2 weight) {
  CongruenceSpec s;
  s.family = Family::kWeighted2;
  s.series = series;
  s.q = q;
  s.k = 2;
  s.r = 0;
  s.weight = std::move(weight);
  return s;
}

void CongruenceSpec::validate() const {
  require_supported_prime(q);
  switch (family) {
    case Family::kRamanujan: {
      if (r >= q) throw UsageError("residue r must lie in [0, q)");
      const std::int64_t m = static_cast<std::int64_t>(q);
      if (((k % m) + m) % m == 0) {
        throw UsageError("convolution exponent k must not be divisible by q");
      }
      break;
    }
    case Family::kLinComb: {
      if (r >= q) throw UsageError("residue r must lie in [0, q)");
      if (coeffs.size() != q - 1) {
        throw UsageError("expected " + std::to_string(q - 1) + " coefficients, got " +
                         std::to_string(coeffs.size()));
      }
      if (std::all_of(coeffs.begin(), coeffs.end(), [&](std::uint32_t c) { return c % q == 0; })) {
        throw UsageError("linear combination coefficients are all zero");
      }
      break;
    }
    case Family::kWeighted2: {
      if (!weight) throw UsageError("weighted spec without a weight");
      if (weight->modulus() != q) throw UsageError("weight defined over a different modulus");
      if (weight->empty()) throw UsageError("weight polynomial is zero");
      if (weight->max_exponent() >= q) {
        throw UsageError("weight exponents must be below q; reduce the weight first");
      }
      break;
    }
  }
}

CongruenceSpec CongruenceSpec::normalized() const {
  validate();
  CongruenceSpec out = *this;
  if (family == Family::kRamanujan) {
    const std::int64_t m = static_cast<std::int64_t>(q);
    out.k = ((k % m) + m) % m;
  }
  for (auto& c : out.coeffs) c %= q;
  return out;
}

std::string CongruenceSpec::to_string() const {
  std::ostringstream os;
  os << diffcong::to_string(family) << ' ' << diffcong::to_string(series) << " q=" << q;
  switch (family) {
    case Family::kRamanujan: os << " k=" << k << " r=" << r; break;
    case Family::kLinComb: {
      os << " r=" << r << " coeffs=";
      for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
      break;
    }
    case Family::kWeighted2: os << " w=" << (weight ? weight->to_string() : "?"); break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

DiffPoly strip_if_nonzero(const DiffPoly& p) {
  return p.is_zero() ? p : strip_common_factor(p).first;
}

}  // namespace

DiffPoly target_ramanujan(const CongruenceSpec& spec) {
  if (spec.family != Family::kRamanujan) throw UsageError("not a ramanujan spec");
  const CongruenceSpec s = spec.normalized();
  const auto k = static_cast<unsigned>(s.k);
  if (s.series == Series::kDivisor) return apply_annihilator(s.r, DiffPoly::variable(s.q, 0, k));
  // P = E^{-1} and E^q is a constant for d, so P^k may be replaced by
  // E^{(q-1)k}.
  return strip_if_nonzero(apply_annihilator(s.r, DiffPoly::variable(s.q, 0, (s.q - 1) * k)));
}

DiffPoly target_lincomb(const CongruenceSpec& spec) {
  if (spec.family != Family::kLinComb) throw UsageError("not a lincomb spec");
  const CongruenceSpec s = spec.normalized();
  DiffPoly inner(s.q);
  for (std::uint32_t k = 1; k < s.q; ++k) {
    const std::uint32_t c = s.coeffs[k - 1];
    if (c == 0) continue;
    // P^k becomes E^{q(q-1) - k} in the partition case.
    const unsigned e = s.series == Series::kDivisor ? k : s.q * (s.q - 1) - k;
    inner += DiffPoly::from_term(s.q, Monomial::variable(s.q, 0, e), c);
  }
  DiffPoly t = apply_annihilator(s.r, inner);
  return s.series == Series::kDivisor ? t : strip_if_nonzero(t);
}

DiffPoly target_weighted2(const CongruenceSpec& spec) {
  if (spec.family != Family::kWeighted2) throw UsageError("not a weighted spec");
  const CongruenceSpec s = spec.normalized();
  const std::uint32_t q = s.q;
  std::vector<DiffPoly> factors;
  factors.reserve(q);
  for (unsigned i = 0; i < q; ++i) {
    factors.push_back(s.series == Series::kDivisor ? DiffPoly::variable(q, i)
                                                   : power_of_E_derivative(q - 1, i, q));
  }
  DiffPoly t(q);
  for (const WeightTerm& w : s.weight->terms()) {
    t += (factors[w.a_exp] * factors[w.b_exp]).scale(w.coeff);
  }
  return s.series == Series::kDivisor ? t : strip_if_nonzero(t);
}

DiffPoly build_target(const CongruenceSpec& spec) {
  switch (spec.family) {
    case Family::kRamanujan: return target_ramanujan(spec);
    case Family::kLinComb: return target_lincomb(spec);
    case Family::kWeighted2: return target_weighted2(spec);
  }
  throw UsageError("unknown congruence family");
}

SeqModQ evaluate_on_series(const DiffPoly& p, const SeqModQ& f) {
  const std::uint32_t q = p.modulus();
  if (f.modulus() != q) throw UsageError("series and polynomial over different fields");
  const std::size_t len = f.size();
  std::vector<std::uint32_t> one(len, 0);
  one[0] = 1;
  const SeqModQ unit(q, std::move(one));

  // powers[k][e - 1] = (d^k f)^{*e}
  std::vector<std::vector<SeqModQ>> powers(q);
  auto power = [&](std::size_t k, unsigned e) -> const SeqModQ& {
    auto& list = powers[k];
    if (list.empty()) list.push_back(derivation_power(f, static_cast<unsigned>(k)));
    while (list.size() < e) list.push_back(convolve(list.back(), list.front()));
    return list[e - 1];
  };

  SeqModQ total(q, len);
  for (const auto& t : p.terms()) {
    SeqModQ prod = unit;
    for (std::size_t k = 0; k < q; ++k) {
      if (t.mono[k] != 0) prod = convolve(prod, power(k, t.mono[k]));
    }
    total = add(total, scale(prod, t.coeff));
  }
  return total;
}

SeqModQ base_sequence(Series series, std::uint32_t q, std::size_t length) {
  return series == Series::kPartition ? partition_seq(q, length) : sigma_seq(q, length);
}

SeqModQ spec_sequence(const CongruenceSpec& spec, std::size_t length) {
  const CongruenceSpec s = spec.normalized();
  const SeqModQ f = base_sequence(s.series, s.q, length);
  switch (s.family) {
    case Family::kRamanujan: return self_convolve(f, static_cast<unsigned>(s.k));
    case Family::kLinComb: {
      SeqModQ total(s.q, length);
      const auto powers = self_convolution_powers(f, s.q - 1);
      for (std::uint32_t k = 1; k < s.q; ++k) {
        if (s.coeffs[k - 1] != 0) total = add(total, scale(powers[k - 1], s.coeffs[k - 1]));
      }
      return total;
    }
    case Family::kWeighted2: return weighted_convolve2(f, f, *s.weight);
  }
  throw UsageError("unknown congruence family");
}

CongruenceCheck check_spec(const CongruenceSpec& spec, std::size_t bound) {
  const SeqModQ seq = spec_sequence(spec, bound + 1);
  if (spec.family == Family::kWeighted2) return check_vanishes(seq);
  return check_congruence(seq, spec.r);
}

}  // namespace diffcong
