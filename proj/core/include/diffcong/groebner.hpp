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

#ifndef DIFFCONG_GROEBNER_HPP_
#define DIFFCONG_GROEBNER_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "diffcong/diffpoly.hpp"

namespace diffcong {

// Reduced, monic Groebner basis, generators sorted ascending by leading
// monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(std::uint32_t q, std::vector<DiffPoly> generators, std::vector<DiffPoly> input = {},
                std::optional<unsigned> degree_bound = {});

  std::uint32_t modulus() const { return q_; }
  std::span<const DiffPoly> generators() const { return generators_; }
  // The polynomials the basis was computed from, when known.
  std::span<const DiffPoly> input() const { return input_; }
  std::size_t size() const { return generators_.size(); }
  const DiffPoly& operator[](std::size_t i) const { return generators_[i]; }
  auto begin() const { return generators_.begin(); }
  auto end() const { return generators_.end(); }

  // Set for a basis of a homogeneous ideal truncated at this degree: only
  // polynomials whose terms have degree <= the bound reduce to their true
  // normal form.
  std::optional<unsigned> degree_bound() const { return degree_bound_; }

  // Ideal membership. A true result is always correct; for a truncated
  // basis a false one is conclusive only within the degree bound.
  bool contains(const DiffPoly& p) const;

 private:
  std::uint32_t q_;
  std::vector<DiffPoly> generators_;
  std::vector<DiffPoly> input_;
  std::optional<unsigned> degree_bound_;
};

class BuchbergerTimeout : public std::runtime_error {
 public:
  BuchbergerTimeout() : std::runtime_error("Groebner basis computation exceeded its time limit") {}
};

struct BuchbergerOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Homogeneous input only: drop S-pairs whose lcm has larger degree. The
  // result agrees with the full basis in every degree up to the bound.
  std::optional<unsigned> degree_bound;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
  std::chrono::duration<double> elapsed{0};
};

// Buchberger with Gebauer-Moeller pair elimination and the normal selection
// strategy. Zero inputs are ignored; an all-zero input gives an empty basis.
GroebnerBasis buchberger(std::span<const DiffPoly> input, const BuchbergerOptions& options = {},
                         BuchbergerStats* stats = nullptr);

// target = sum cofactors[i] * basis[i] + remainder.
struct Certificate {
  DiffPoly target;
  std::vector<DiffPoly> basis;
  std::vector<DiffPoly> cofactors;
  DiffPoly remainder;

  bool proves_membership() const { return remainder.is_zero(); }
};

// Multivariate division by `basis`, in basis order.
Certificate normal_form(const DiffPoly& target, std::span<const DiffPoly> basis);
Certificate normal_form(const DiffPoly& target, const GroebnerBasis& basis);

// Remainder only.
DiffPoly reduce(const DiffPoly& p, std::span<const DiffPoly> basis);

// Recomputes sum cofactors[i] * basis[i] + remainder and compares with the
// target. Uses ring arithmetic only.
bool verify_certificate(const Certificate& c);

DiffPoly s_polynomial(const DiffPoly& f, const DiffPoly& g);

// Every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const DiffPoly> polys);

// No leading monomial divides a term of another generator, all monic.
bool is_reduced(std::span<const DiffPoly> polys);

}  // namespace diffcong

#endif  // DIFFCONG_GROEBNER_HPP_
