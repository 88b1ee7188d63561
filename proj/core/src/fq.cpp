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

#include "diffcong/fq.hpp"

#include <array>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace diffcong {

namespace {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr std::uint32_t kInverseTableLimit = 1u << 16;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_supported_prime(std::uint64_t q) {
  // Small per-thread memo: element constructors call this constantly.
  thread_local std::array<std::uint64_t, 4> accepted{};
  for (std::uint64_t a : accepted) {
    if (a == q) return;
  }
  if (q <= 3) {
    throw UsageError("modulus must be a prime greater than 3, got " + std::to_string(q));
  }
  if (q > std::numeric_limits<std::uint32_t>::max() || !is_prime(q)) {
    throw UsageError("modulus must be a 32-bit prime, got " + std::to_string(q));
  }
  thread_local std::size_t next = 0;
  accepted[next] = q;
  next = (next + 1) % accepted.size();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q, new_r = a % q;
  if (new_r == 0) throw DivisionByZero();
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += q;
  return static_cast<std::uint32_t>(t);
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  require_supported_prime(q);
  if (q < kInverseTableLimit) {
    inverses_.assign(q, 0);
    inverses_[1] = 1;
    for (std::uint32_t a = 2; a < q; ++a) {
      // inv(a) = -(q / a) * inv(q mod a)
      inverses_[a] = mul(q - q / a, inverses_[q % a]);
    }
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % q_ == 0) throw DivisionByZero();
  if (!inverses_.empty()) return inverses_[a % q_];
  return inverse_mod(a, q_);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  return static_cast<std::uint32_t>(powmod(a, static_cast<std::uint64_t>(e), q_));
}

const PrimeField& prime_field(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<PrimeField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[q];
  if (!slot) {
    try {
      slot = std::make_unique<PrimeField>(q);
    } catch (...) {
      fields.erase(q);
      throw;
    }
  }
  return *slot;
}

FqElem::FqElem(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  require_supported_prime(modulus);
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  value_ = static_cast<std::uint32_t>(r < 0 ? r + modulus : r);
}

namespace {

void check_same(FqElem a, FqElem b) {
  if (a.modulus() != b.modulus()) {
    throw UsageError("GF(q) modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                     std::to_string(b.modulus()));
  }
}

}  // namespace

FqElem FqElem::inv() const { return FqElem(inverse_mod(value_, modulus_), modulus_); }

FqElem FqElem::pow(std::int64_t e) const {
  std::uint64_t base = value_;
  if (e < 0) {
    base = inverse_mod(value_, modulus_);
    e = -e;
  }
  return FqElem(static_cast<std::int64_t>(powmod(base, static_cast<std::uint64_t>(e), modulus_)),
                modulus_);
}

FqElem FqElem::operator-() const { return FqElem(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

FqElem operator+(FqElem a, FqElem b) {
  check_same(a, b);
  return FqElem(static_cast<std::int64_t>(a.value_) + b.value_, a.modulus_);
}

FqElem operator-(FqElem a, FqElem b) {
  check_same(a, b);
  return FqElem(static_cast<std::int64_t>(a.value_) - b.value_, a.modulus_);
}

FqElem operator*(FqElem a, FqElem b) {
  check_same(a, b);
  return FqElem(static_cast<std::int64_t>(mulmod(a.value_, b.value_, a.modulus_)), a.modulus_);
}

std::ostream& operator<<(std::ostream& os, FqElem a) { return os << a.value(); }

}  // namespace diffcong
