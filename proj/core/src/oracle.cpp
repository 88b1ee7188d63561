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

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace diffcong {

SeqModQ::SeqModQ(std::uint32_t q, std::size_t length) : q_(q), coeffs_(length, 0) {
  require_supported_prime(q);
  if (length == 0) throw UsageError("sequence length must be at least 1");
}

SeqModQ::SeqModQ(std::uint32_t q, std::vector<std::uint32_t> coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
  require_supported_prime(q);
  if (coeffs_.empty()) throw UsageError("sequence length must be at least 1");
  for (auto& c : coeffs_) c %= q_;
}

bool SeqModQ::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

SeqModQ SeqModQ::truncated(std::size_t length) const {
  length = std::min(length, coeffs_.size());
  return SeqModQ(q_, std::vector<std::uint32_t>(coeffs_.begin(), coeffs_.begin() + length));
}

// ---------------------------------------------------------------------------
// Weights

WeightPoly2::WeightPoly2(std::uint32_t q, std::vector<WeightTerm> terms) : q_(q) {
  require_supported_prime(q);
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> merged;
  for (WeightTerm t : terms) {
    if (t.a_exp < t.b_exp) std::swap(t.a_exp, t.b_exp);
    auto& c = merged[{t.a_exp, t.b_exp}];
    c = (c + t.coeff % q) % q;
  }
  for (const auto& [exps, c] : merged) {
    if (c != 0) terms_.push_back({exps.first, exps.second, static_cast<std::uint32_t>(c)});
  }
  std::sort(terms_.begin(), terms_.end(), [](const WeightTerm& x, const WeightTerm& y) {
    const unsigned dx = x.a_exp + x.b_exp, dy = y.a_exp + y.b_exp;
    if (dx != dy) return dx > dy;
    return x.a_exp > y.a_exp;
  });
}

namespace {

unsigned parse_uint(std::string_view s, std::size_t& pos, std::string_view whole) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    throw UsageError("malformed weight '" + std::string(whole) + "': expected a number");
  }
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + static_cast<unsigned>(s[pos] - '0');
    if (v > std::numeric_limits<std::uint32_t>::max()) {
      throw UsageError("malformed weight '" + std::string(whole) + "': number too large");
    }
    ++pos;
  }
  return static_cast<unsigned>(v);
}

}  // namespace

WeightPoly2 WeightPoly2::parse(std::string_view text, std::uint32_t q) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) throw UsageError("empty weight polynomial");

  std::vector<WeightTerm> terms;
  std::size_t start = 0;
  while (start <= compact.size()) {
    std::size_t end = compact.find('+', start);
    if (end == std::string::npos) end = compact.size();
    std::string_view term(compact.data() + start, end - start);
    if (term.empty()) throw UsageError("malformed weight '" + std::string(text) + "': empty term");

    WeightTerm t{0, 0, 1};
    std::size_t pos = 0;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      t.coeff = parse_uint(term, pos, text) % q;
      if (pos < term.size() && term[pos] == '*') {
        if (++pos == term.size()) throw UsageError("malformed weight '" + std::string(text) + "'");
      }
    }
    bool seen_a = false, seen_b = false;
    while (pos < term.size()) {
      const char var = term[pos++];
      if ((var != 'a' && var != 'b') || (var == 'a' && (seen_a || seen_b)) ||
          (var == 'b' && seen_b)) {
        throw UsageError("malformed weight '" + std::string(text) + "'");
      }
      unsigned e = 1;
      if (pos < term.size() && term[pos] == '^') {
        ++pos;
        e = parse_uint(term, pos, text);
      }
      (var == 'a' ? t.a_exp : t.b_exp) = e;
      (var == 'a' ? seen_a : seen_b) = true;
      if (pos < term.size() && term[pos] == '*') {
        if (++pos == term.size()) throw UsageError("malformed weight '" + std::string(text) + "'");
      }
    }
    terms.push_back(t);
    start = end + 1;
    if (end == compact.size()) break;
  }
  return WeightPoly2(q, std::move(terms));
}

unsigned WeightPoly2::max_exponent() const {
  unsigned m = 0;
  for (const auto& t : terms_) m = std::max(m, t.a_exp);
  return m;
}

std::uint32_t WeightPoly2::evaluate(std::uint64_t a, std::uint64_t b) const {
  const PrimeField field(q_);
  const auto ar = static_cast<std::uint32_t>(a % q_);
  const auto br = static_cast<std::uint32_t>(b % q_);
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    acc = field.add(acc,
                    field.mul(t.coeff, field.mul(field.pow(ar, t.a_exp), field.pow(br, t.b_exp))));
  }
  return acc;
}

std::string WeightPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool bare = t.a_exp == 0 && t.b_exp == 0;
    if (t.coeff != 1 || bare) os << t.coeff;
    if (t.a_exp > 0) {
      os << 'a';
      if (t.a_exp > 1) os << '^' << t.a_exp;
    }
    if (t.b_exp > 0) {
      os << 'b';
      if (t.b_exp > 1) os << '^' << t.b_exp;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sequences

SeqModQ partition_seq(std::uint32_t q, std::size_t length) {
  SeqModQ out(q, length);
  std::vector<std::uint32_t> p(length, 0);
  p[0] = 1 % q;
  for (std::size_t n = 1; n < length; ++n) {
    std::int64_t acc = 0;
    for (std::size_t m = 1;; ++m) {
      const std::size_t g1 = m * (3 * m - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = m * (3 * m + 1) / 2;
      std::int64_t term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      acc += (m % 2 == 1) ? term : -term;
    }
    acc %= static_cast<std::int64_t>(q);
    p[n] = static_cast<std::uint32_t>(acc < 0 ? acc + q : acc);
  }
  return SeqModQ(q, std::move(p));
}

SeqModQ sigma_seq(std::uint32_t q, std::size_t length, SigmaVariant variant) {
  std::vector<std::uint64_t> acc(length, 0);
  const PrimeField field(q);
  for (std::size_t d = 1; d < length; ++d) {
    std::uint64_t contrib = 0;
    switch (variant) {
      case SigmaVariant::kAll: contrib = d % q; break;
      case SigmaVariant::kOdd: contrib = (d % 2 == 1) ? d % q : 0; break;
      case SigmaVariant::kEven: contrib = (d % 2 == 0) ? d % q : 0; break;
      case SigmaVariant::kCubes: contrib = field.pow(static_cast<std::uint32_t>(d % q), 3); break;
    }
    if (contrib == 0) continue;
    for (std::size_t m = d; m < length; m += d) acc[m] += contrib;
  }
  std::vector<std::uint32_t> out(length);
  for (std::size_t n = 0; n < length; ++n) out[n] = static_cast<std::uint32_t>(acc[n] % q);
  return SeqModQ(q, std::move(out));
}

SeqModQ pentagonal_seq(std::uint32_t q, std::size_t length) {
  SeqModQ out(q, length);
  const PrimeField field(q);
  out.set(0, 1);
  for (std::size_t m = 1;; ++m) {
    const std::size_t lo = m * (3 * m - 1) / 2;
    if (lo >= length) break;
    const std::uint32_t sign = (m % 2 == 1) ? q - 1 : 1;
    out.set(lo, field.add(out[lo], sign));
    const std::size_t hi = m * (3 * m + 1) / 2;
    if (hi < length) out.set(hi, field.add(out[hi], sign));
  }
  return out;
}

SeqModQ jacobi_seq(std::uint32_t q, std::size_t length) {
  SeqModQ out(q, length);
  const PrimeField field(q);
  for (std::size_t n = 0;; ++n) {
    const std::size_t e = n * (n + 1) / 2;
    if (e >= length) break;
    std::uint32_t c = field.reduce(static_cast<std::int64_t>(2 * n + 1));
    if (n % 2 == 1) c = field.neg(c);
    out.set(e, field.add(out[e], c));
  }
  return out;
}

SeqModQ derivation(const SeqModQ& a) { return derivation_power(a, 1); }

SeqModQ derivation_power(const SeqModQ& a, unsigned k) {
  const std::uint32_t q = a.modulus();
  const PrimeField field(q);
  // (n mod q)^k only depends on n mod q.
  std::vector<std::uint32_t> table(q);
  for (std::uint32_t r = 0; r < q; ++r) table[r] = field.pow(r, k);
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) out[n] = field.mul(table[n % q], a[n]);
  return SeqModQ(q, std::move(out));
}

namespace {

void require_same_modulus(const SeqModQ& a, const SeqModQ& b) {
  if (a.modulus() != b.modulus()) {
    throw UsageError("sequence modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                     std::to_string(b.modulus()));
  }
}

}  // namespace

SeqModQ add(const SeqModQ& a, const SeqModQ& b) {
  require_same_modulus(a, b);
  const PrimeField field(a.modulus());
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = field.add(a[i], b[i]);
  return SeqModQ(a.modulus(), std::move(out));
}

SeqModQ scale(const SeqModQ& a, std::uint32_t c) {
  const PrimeField field(a.modulus());
  std::vector<std::uint32_t> out(a.size());
  c %= a.modulus();
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.mul(a[i], c);
  return SeqModQ(a.modulus(), std::move(out));
}

SeqModQ convolve(const SeqModQ& a, const SeqModQ& b) {
  require_same_modulus(a, b);
  const std::uint64_t q = a.modulus();
  const std::size_t n = std::min(a.size(), b.size());
  // Products are < (q-1)^2; reduce whenever the next chunk could overflow.
  const std::uint64_t max_product = (q - 1) * (q - 1);
  const std::size_t chunk =
      max_product == 0
          ? n + 1
          : static_cast<std::size_t>(std::clamp<std::uint64_t>(
                std::numeric_limits<std::uint64_t>::max() / max_product - 1, 1, n + 1));
  std::vector<std::uint64_t> lhs(a.coeffs().begin(), a.coeffs().begin() + n);
  std::vector<std::uint64_t> rev(n);
  for (std::size_t i = 0; i < n; ++i) rev[i] = b[n - 1 - i];

  std::vector<std::uint32_t> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    // sum_{i<=k} a[i] b[k-i] = sum_i lhs[i] * rev[n-1-k+i]
    const std::uint64_t* x = lhs.data();
    const std::uint64_t* y = rev.data() + (n - 1 - k);
    std::uint64_t total = 0;
    for (std::size_t start = 0; start <= k; start += chunk) {
      const std::size_t stop = std::min(k + 1, start + chunk);
      std::uint64_t s = 0;
      for (std::size_t i = start; i < stop; ++i) s += x[i] * y[i];
      total = (total + s % q) % q;
    }
    out[k] = static_cast<std::uint32_t>(total);
  }
  return SeqModQ(a.modulus(), std::move(out));
}

SeqModQ self_convolve(const SeqModQ& a, unsigned k) {
  if (k == 0) throw UsageError("self-convolution exponent must be at least 1");
  // Binary powering.
  std::optional<SeqModQ> result;
  SeqModQ base = a;
  while (k > 0) {
    if (k & 1) result = result ? convolve(*result, base) : base;
    k >>= 1;
    if (k > 0) base = convolve(base, base);
  }
  return *result;
}

std::vector<SeqModQ> self_convolution_powers(const SeqModQ& a, unsigned max_k) {
  std::vector<SeqModQ> out;
  out.reserve(max_k);
  if (max_k == 0) return out;
  out.push_back(a);
  for (unsigned k = 2; k <= max_k; ++k) out.push_back(convolve(out.back(), a));
  return out;
}

SeqModQ weighted_convolve2(const SeqModQ& a, const SeqModQ& b, const WeightPoly2& w) {
  require_same_modulus(a, b);
  if (w.modulus() != a.modulus()) throw UsageError("weight modulus mismatch");
  const std::size_t n = std::min(a.size(), b.size());
  SeqModQ total(a.modulus(), n);
  for (const WeightTerm& t : w.terms()) {
    SeqModQ part = convolve(derivation_power(a, t.a_exp), derivation_power(b, t.b_exp));
    total = add(total, scale(part, t.coeff));
  }
  return total;
}

SeqModQ sigma_inv_seq(std::uint32_t q, std::size_t length) {
  const PrimeField field(q);
  // shifted[k] = sigma(k + 1)
  const SeqModQ sigma = sigma_seq(q, length + 1);
  std::vector<std::uint32_t> inv(length, 0);
  inv[0] = field.inv(sigma[1]);
  for (std::size_t n = 1; n < length; ++n) {
    std::uint64_t acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += static_cast<std::uint64_t>(sigma[k + 1]) * inv[n - k];
      if ((k & 0xFFF) == 0) acc %= q;
    }
    inv[n] = field.mul(field.neg(static_cast<std::uint32_t>(acc % q)), inv[0]);
  }
  return SeqModQ(q, std::move(inv));
}

CongruenceCheck check_congruence(const SeqModQ& seq, std::uint32_t r) {
  const std::uint32_t q = seq.modulus();
  if (r >= q) throw UsageError("residue must lie in [0, q)");
  for (std::size_t n = r; n < seq.size(); n += q) {
    if (seq[n] != 0) return {false, n};
  }
  return {true, std::nullopt};
}

CongruenceCheck check_vanishes(const SeqModQ& seq) {
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (seq[n] != 0) return {false, n};
  }
  return {true, std::nullopt};
}

std::vector<std::int64_t> sigma_exact(std::size_t length, SigmaVariant variant) {
  std::vector<std::int64_t> s(length, 0);
  for (std::size_t d = 1; d < length; ++d) {
    std::int64_t contrib = 0;
    const auto dd = static_cast<std::int64_t>(d);
    switch (variant) {
      case SigmaVariant::kAll: contrib = dd; break;
      case SigmaVariant::kOdd: contrib = (d % 2 == 1) ? dd : 0; break;
      case SigmaVariant::kEven: contrib = (d % 2 == 0) ? dd : 0; break;
      case SigmaVariant::kCubes: contrib = dd * dd * dd; break;
    }
    if (contrib == 0) continue;
    for (std::size_t m = d; m < length; m += d) s[m] += contrib;
  }
  return s;
}

bool DivisorCheckReport::all_passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const DivisorCheckItem& i) { return i.passed; });
}

}  // namespace diffcong
