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

#ifndef DIFFCONG_FQ_HPP_
#define DIFFCONG_FQ_HPP_

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffcong {

// Raised for malformed input: bad modulus, mixed moduli, invalid specs.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in GF(q)") {}
};

bool is_prime(std::uint64_t n);

// Throws UsageError unless q is a prime greater than 3.
void require_supported_prime(std::uint64_t q);

// Arithmetic context for GF(q). Residues are plain integers in [0, q);
// this is the hot-path interface used by polynomials and sequences.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t modulus() const { return q_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + q_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

 private:
  std::uint32_t q_;
  // Inverses of 0..q-1 for small fields; empty for large q.
  std::vector<std::uint32_t> inverses_;
};

// Process-wide shared field for q; the reference stays valid forever.
const PrimeField& prime_field(std::uint32_t q);

// An element of GF(q) that carries its modulus, so mixing fields is caught.
class FqElem {
 public:
  FqElem(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FqElem inv() const;
  FqElem pow(std::int64_t e) const;

  FqElem operator-() const;
  friend FqElem operator+(FqElem a, FqElem b);
  friend FqElem operator-(FqElem a, FqElem b);
  friend FqElem operator*(FqElem a, FqElem b);
  friend FqElem operator/(FqElem a, FqElem b) { return a * b.inv(); }
  FqElem& operator+=(FqElem b) { return *this = *this + b; }
  FqElem& operator-=(FqElem b) { return *this = *this - b; }
  FqElem& operator*=(FqElem b) { return *this = *this * b; }

  friend bool operator==(FqElem a, FqElem b) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, FqElem a);

// Extended-Euclid inverse; a must be nonzero mod q.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q);

}  // namespace diffcong

#endif  // DIFFCONG_FQ_HPP_
