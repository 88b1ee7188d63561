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

// Polynomials over GF(q) in X_0..X_{q-1}, where X_k stands for the k-th
// power of the derivation X d/dX applied to a fixed series. derive() acts
// on the symbols with the wrap-around dX_{q-1} = X_1.
//
// Term order is graded reverse lexicographic. Ties in total degree are
// broken by looking at X_0 first (smaller exponent wins), then X_1, and so
// on, so X_{q-1} > X_{q-2} > ... > X_0 among the variables.

#ifndef DIFFCONG_DIFFPOLY_HPP_
#define DIFFCONG_DIFFPOLY_HPP_

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffcong/fq.hpp"

namespace diffcong {

class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint16_t, 17>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::span<const unsigned> exponents);

  // X_k^e in nvars variables.
  static Monomial variable(std::size_t nvars, std::size_t k, unsigned e = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned operator[](std::size_t k) const { return exps_[k]; }
  void set(std::size_t k, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::uint64_t support_mask() const { return mask_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  // "1", "X0^2*X3".
  std::string to_string() const;

 private:
  void refresh();

  Exponents exps_;
  unsigned degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

class DiffPoly {
 public:
  // The zero polynomial of GF(q)[X_0..X_{q-1}].
  explicit DiffPoly(std::uint32_t q);

  static DiffPoly constant(std::uint32_t q, std::int64_t c);
  static DiffPoly variable(std::uint32_t q, std::size_t k, unsigned e = 1);
  static DiffPoly from_term(std::uint32_t q, Monomial mono, std::int64_t c);
  // Sorts, merges and drops zeros.
  static DiffPoly from_terms(std::uint32_t q, std::vector<Term> terms);

  // Grammar: terms joined by '+' or '-', each a '*'-product of an optional
  // integer and factors Xk or Xk^e. Whitespace is ignored.
  static DiffPoly parse(std::string_view text, std::uint32_t q);

  std::uint32_t modulus() const { return field_->modulus(); }
  std::size_t nvars() const { return field_->modulus(); }
  const PrimeField& field() const { return *field_; }

  // Descending term order.
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& leading_monomial() const;
  std::uint32_t leading_coeff() const;
  unsigned total_degree() const;
  // Every term has the same total degree (true for zero).
  bool is_homogeneous() const;
  // Coefficient of `mono`, zero if absent.
  std::uint32_t coeff(const Monomial& mono) const;

  DiffPoly operator-() const;
  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  DiffPoly& operator+=(const DiffPoly& b) { return *this = *this + b; }
  DiffPoly& operator-=(const DiffPoly& b) { return *this = *this - b; }
  DiffPoly& operator*=(const DiffPoly& b) { return *this = *this * b; }

  DiffPoly scale(std::uint32_t c) const;
  DiffPoly scale(FqElem c) const;
  // c * mono * this.
  DiffPoly mul_term(const Monomial& mono, std::uint32_t c) const;
  DiffPoly monic() const;

  friend bool operator==(const DiffPoly& a, const DiffPoly& b);

  // "2*X0^2*X1 + 4*X2", "0" for the zero polynomial.
  std::string to_string() const;

 private:
  DiffPoly(const PrimeField* field, std::vector<Term> sorted_terms)
      : field_(field), terms_(std::move(sorted_terms)) {}
  void check_same_ring(const DiffPoly& other) const;

  const PrimeField* field_;
  std::vector<Term> terms_;
};

// The derivation, by the Leibniz rule with dX_k = X_{k+1}, dX_{q-1} = X_1.
DiffPoly derive(const DiffPoly& p);
DiffPoly derive(const DiffPoly& p, unsigned times);

// d^j (X_0^m) in GF(q)[X_0..X_{q-1}].
DiffPoly power_of_E_derivative(unsigned m, unsigned j, std::uint32_t q);

// Divides out the componentwise-minimum monomial of all terms.
std::pair<DiffPoly, Monomial> strip_common_factor(const DiffPoly& p);

}  // namespace diffcong

#endif  // DIFFCONG_DIFFPOLY_HPP_
