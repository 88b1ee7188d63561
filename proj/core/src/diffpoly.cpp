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

#include "diffcong/diffpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace diffcong {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<std::uint16_t>::max();

std::uint16_t checked_exponent(std::uint64_t e) {
  if (e > kMaxExponent) throw UsageError("monomial exponent overflow");
  return static_cast<std::uint16_t>(e);
}

void require_same_nvars(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw UsageError("monomials over different variable sets");
}

}  // namespace

Monomial::Monomial(std::span<const unsigned> exponents) {
  exps_.reserve(exponents.size());
  for (unsigned e : exponents) exps_.push_back(checked_exponent(e));
  refresh();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t k, unsigned e) {
  if (k >= nvars) throw UsageError("variable index out of range");
  Monomial m(nvars);
  m.set(k, e);
  return m;
}

void Monomial::set(std::size_t k, unsigned e) {
  exps_.at(k) = checked_exponent(e);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    degree_ += exps_[k];
    if (exps_[k] != 0) mask_ |= std::uint64_t{1} << (k % 64);
  }
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  if (exps_.size() <= 64) return (mask_ & other.mask_) == 0;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] != 0 && other.exps_[k] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  Monomial out = a;
  for (std::size_t k = 0; k < a.exps_.size(); ++k) {
    out.exps_[k] = checked_exponent(std::uint64_t{a.exps_[k]} + b.exps_[k]);
  }
  out.degree_ = a.degree_ + b.degree_;
  out.mask_ = a.mask_ | b.mask_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  if (!b.divides(a)) throw UsageError("monomial does not divide");
  Monomial out = a;
  for (std::size_t k = 0; k < a.exps_.size(); ++k) out.exps_[k] -= b.exps_[k];
  out.refresh();
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  Monomial out = a;
  for (std::size_t k = 0; k < a.exps_.size(); ++k) out.exps_[k] = std::max(a.exps_[k], b.exps_[k]);
  out.refresh();
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  Monomial out = a;
  for (std::size_t k = 0; k < a.exps_.size(); ++k) out.exps_[k] = std::min(a.exps_[k], b.exps_[k]);
  out.refresh();
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t k = 0; k < a.exps_.size(); ++k) {
    if (a.exps_[k] != b.exps_[k]) return b.exps_[k] <=> a.exps_[k];
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'X';
    out += std::to_string(k);
    if (exps_[k] > 1) {
      out += '^';
      out += std::to_string(exps_[k]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Sorts descending, merges equal monomials, drops zero coefficients.
void canonicalize(std::vector<Term>& terms, const PrimeField& field) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.mono > y.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::uint32_t c = 0;
    std::size_t j = i;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c = field.add(c, terms[j].coeff);
      ++j;
    }
    if (c != 0) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

DiffPoly::DiffPoly(std::uint32_t q) : field_(&prime_field(q)) {}

DiffPoly DiffPoly::constant(std::uint32_t q, std::int64_t c) {
  return from_term(q, Monomial(q), c);
}

DiffPoly DiffPoly::variable(std::uint32_t q, std::size_t k, unsigned e) {
  return from_term(q, Monomial::variable(q, k, e), 1);
}

DiffPoly DiffPoly::from_term(std::uint32_t q, Monomial mono, std::int64_t c) {
  DiffPoly p(q);
  if (mono.nvars() != q) throw UsageError("monomial has the wrong number of variables");
  const std::uint32_t r = p.field_->reduce(c);
  if (r != 0) p.terms_.push_back({std::move(mono), r});
  return p;
}

DiffPoly DiffPoly::from_terms(std::uint32_t q, std::vector<Term> terms) {
  DiffPoly p(q);
  for (auto& t : terms) {
    if (t.mono.nvars() != q) throw UsageError("monomial has the wrong number of variables");
    t.coeff %= q;
  }
  canonicalize(terms, *p.field_);
  p.terms_ = std::move(terms);
  return p;
}

namespace {

std::uint64_t parse_number(std::string_view s, std::size_t& pos, std::string_view whole) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    throw UsageError("malformed polynomial '" + std::string(whole) + "'");
  }
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
      throw UsageError("number too large in polynomial '" + std::string(whole) + "'");
    }
    v = v * 10 + static_cast<unsigned>(s[pos] - '0');
    ++pos;
  }
  return v;
}

}  // namespace

DiffPoly DiffPoly::parse(std::string_view text, std::uint32_t q) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw UsageError("empty polynomial");
  const PrimeField& field = prime_field(q);
  std::vector<Term> terms;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw UsageError("malformed polynomial '" + std::string(text) + "'");
    }
    first = false;
    std::uint32_t c = 1;
    Monomial mono(q);
    bool have_factor = false;
    while (true) {
      if (pos >= s.size()) throw UsageError("malformed polynomial '" + std::string(text) + "'");
      if (s[pos] == 'X') {
        ++pos;
        if (pos < s.size() && s[pos] == '_') ++pos;
        const std::uint64_t k = parse_number(s, pos, text);
        if (k >= q) {
          throw UsageError("variable X" + std::to_string(k) +
                           " out of range for q=" + std::to_string(q));
        }
        std::uint64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = parse_number(s, pos, text);
        }
        mono.set(k, checked_exponent(mono[k] + e));
      } else {
        c = field.mul(c, static_cast<std::uint32_t>(parse_number(s, pos, text) % q));
      }
      have_factor = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) throw UsageError("malformed polynomial '" + std::string(text) + "'");
    terms.push_back({std::move(mono), negative ? field.neg(c) : c});
  }
  return from_terms(q, std::move(terms));
}

const Monomial& DiffPoly::leading_monomial() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
  return terms_.front().mono;
}

std::uint32_t DiffPoly::leading_coeff() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
  return terms_.front().coeff;
}

unsigned DiffPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool DiffPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.degree() == terms_.front().mono.degree();
  });
}

std::uint32_t DiffPoly::coeff(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& m) { return t.mono > m; });
  return (it != terms_.end() && it->mono == mono) ? it->coeff : 0;
}

void DiffPoly::check_same_ring(const DiffPoly& other) const {
  if (field_->modulus() != other.field_->modulus()) {
    throw UsageError("polynomials over different fields: q=" + std::to_string(modulus()) +
                     " vs q=" + std::to_string(other.modulus()));
  }
}

DiffPoly DiffPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field_->neg(t.coeff);
  return DiffPoly(field_, std::move(out));
}

namespace {

// Merge of two sorted term lists, b scaled by `scale_b`.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, std::uint32_t scale_b,
                        const PrimeField& field) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto cmp = a[i].mono <=> b[j].mono;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].mono, field.mul(b[j].coeff, scale_b)});
      ++j;
    } else {
      const std::uint32_t c = field.add(a[i].coeff, field.mul(b[j].coeff, scale_b));
      if (c != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, field.mul(b[j].coeff, scale_b)});
  return out;
}

}  // namespace

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
  a.check_same_ring(b);
  return DiffPoly(a.field_, merge(a.terms_, b.terms_, 1, *a.field_));
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
  a.check_same_ring(b);
  return DiffPoly(a.field_, merge(a.terms_, b.terms_, a.field_->modulus() - 1, *a.field_));
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return DiffPoly(a.field_, {});
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      out.push_back({x.mono * y.mono, a.field_->mul(x.coeff, y.coeff)});
    }
  }
  canonicalize(out, *a.field_);
  return DiffPoly(a.field_, std::move(out));
}

DiffPoly DiffPoly::scale(std::uint32_t c) const {
  c %= modulus();
  if (c == 0) return DiffPoly(field_, {});
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field_->mul(t.coeff, c);
  return DiffPoly(field_, std::move(out));
}

DiffPoly DiffPoly::scale(FqElem c) const {
  if (c.modulus() != modulus()) throw UsageError("scalar from a different field");
  return scale(c.value());
}

DiffPoly DiffPoly::mul_term(const Monomial& mono, std::uint32_t c) const {
  c %= modulus();
  if (c == 0) return DiffPoly(field_, {});
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves the term order.
  for (const auto& t : terms_) out.push_back({t.mono * mono, field_->mul(t.coeff, c)});
  return DiffPoly(field_, std::move(out));
}

DiffPoly DiffPoly::monic() const {
  if (is_zero()) return *this;
  return scale(field_->inv(leading_coeff()));
}

bool operator==(const DiffPoly& a, const DiffPoly& b) {
  return a.modulus() == b.modulus() && a.terms_ == b.terms_;
}

std::string DiffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
      continue;
    }
    if (t.coeff != 1) {
      out += std::to_string(t.coeff);
      out += '*';
    }
    out += t.mono.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------

DiffPoly derive(const DiffPoly& p) {
  const std::uint32_t q = p.modulus();
  const PrimeField& field = p.field();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < q; ++k) {
      const unsigned e = t.mono[k];
      if (e == 0) continue;
      const std::uint32_t c = field.mul(t.coeff, e % q);
      if (c == 0) continue;
      Monomial m = t.mono;
      m.set(k, e - 1);
      const std::size_t next = (k + 1 == q) ? 1 : k + 1;
      m.set(next, m[next] + 1);
      out.push_back({std::move(m), c});
    }
  }
  return DiffPoly::from_terms(q, std::move(out));
}

DiffPoly derive(const DiffPoly& p, unsigned times) {
  DiffPoly out = p;
  for (unsigned i = 0; i < times; ++i) out = derive(out);
  return out;
}

DiffPoly power_of_E_derivative(unsigned m, unsigned j, std::uint32_t q) {
  require_supported_prime(q);
  if (j > q - 1) throw UsageError("derivative order must not exceed q-1");
  return derive(DiffPoly::variable(q, 0, m), j);
}

std::pair<DiffPoly, Monomial> strip_common_factor(const DiffPoly& p) {
  if (p.is_zero()) throw UsageError("cannot strip a common factor from the zero polynomial");
  Monomial common = p.terms().front().mono;
  for (const auto& t : p.terms()) common = gcd(common, t.mono);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono / common, t.coeff});
  // Dividing by a common monomial preserves the term order.
  return {DiffPoly::from_terms(p.modulus(), std::move(out)), common};
}

}  // namespace diffcong
