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

#include "diffcong/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace diffcong {

GroebnerBasis::GroebnerBasis(std::uint32_t q, std::vector<DiffPoly> generators,
                             std::vector<DiffPoly> input, std::optional<unsigned> degree_bound)
    : q_(q),
      generators_(std::move(generators)),
      input_(std::move(input)),
      degree_bound_(degree_bound) {
  require_supported_prime(q);
  for (const auto& g : generators_) {
    if (g.modulus() != q) throw UsageError("basis generator over a different field");
  }
}

bool GroebnerBasis::contains(const DiffPoly& p) const { return reduce(p, generators_).is_zero(); }

namespace {

using Accumulator = std::map<Monomial, std::uint32_t, std::greater<>>;

void check_deadline(const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw BuchbergerTimeout();
}

// Full reduction of p by the listed polynomials, in list order. When
// `cofactors` is set, the quotient terms for reducer i are appended to
// (*cofactors)[i]; they come out in descending order.
DiffPoly reduce_impl(const DiffPoly& p, std::span<const DiffPoly* const> reducers,
                     std::vector<std::vector<Term>>* cofactors,
                     const std::optional<std::chrono::steady_clock::time_point>& deadline = {}) {
  const std::uint32_t q = p.modulus();
  const PrimeField& field = p.field();
  std::vector<std::uint32_t> lead_inv;
  lead_inv.reserve(reducers.size());
  for (const DiffPoly* g : reducers) {
    if (g->modulus() != q) throw UsageError("reduction over different fields");
    lead_inv.push_back(g->is_zero() ? 0 : field.inv(g->leading_coeff()));
  }

  Accumulator acc;
  for (const auto& t : p.terms()) acc.emplace(t.mono, t.coeff);
  std::vector<Term> remainder;
  std::size_t steps = 0;

  while (!acc.empty()) {
    if (deadline && (++steps & 0x3FF) == 0) check_deadline(deadline);
    auto top = acc.begin();
    const Monomial m = top->first;
    const std::uint32_t c = top->second;
    acc.erase(top);

    std::size_t hit = reducers.size();
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!reducers[i]->is_zero() && reducers[i]->leading_monomial().divides(m)) {
        hit = i;
        break;
      }
    }
    if (hit == reducers.size()) {
      remainder.push_back({m, c});
      continue;
    }
    const DiffPoly& g = *reducers[hit];
    const std::uint32_t factor = field.mul(c, lead_inv[hit]);
    const Monomial shift = m / g.leading_monomial();
    if (cofactors) (*cofactors)[hit].push_back({shift, factor});
    const auto terms = g.terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      const std::uint32_t sub = field.mul(factor, terms[k].coeff);
      auto [it, inserted] = acc.try_emplace(terms[k].mono * shift, 0);
      it->second = field.sub(it->second, sub);
      if (it->second == 0) acc.erase(it);
    }
  }
  return DiffPoly::from_terms(q, std::move(remainder));
}

std::vector<const DiffPoly*> pointers(std::span<const DiffPoly> polys) {
  std::vector<const DiffPoly*> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(&p);
  return out;
}

}  // namespace

Certificate normal_form(const DiffPoly& target, std::span<const DiffPoly> basis) {
  std::vector<std::vector<Term>> quotient(basis.size());
  const auto reducers = pointers(basis);
  DiffPoly remainder = reduce_impl(target, reducers, &quotient);
  Certificate cert{
      target, std::vector<DiffPoly>(basis.begin(), basis.end()), {}, std::move(remainder)};
  cert.cofactors.reserve(basis.size());
  for (auto& terms : quotient) {
    cert.cofactors.push_back(DiffPoly::from_terms(target.modulus(), std::move(terms)));
  }
  return cert;
}

Certificate normal_form(const DiffPoly& target, const GroebnerBasis& basis) {
  if (basis.modulus() != target.modulus())
    throw UsageError("target and basis over different fields");
  return normal_form(target, basis.generators());
}

DiffPoly reduce(const DiffPoly& p, std::span<const DiffPoly> basis) {
  return reduce_impl(p, pointers(basis), nullptr);
}

bool verify_certificate(const Certificate& c) {
  if (c.basis.size() != c.cofactors.size()) return false;
  const std::uint32_t q = c.target.modulus();
  if (c.remainder.modulus() != q) return false;
  DiffPoly sum = c.remainder;
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    if (c.basis[i].modulus() != q || c.cofactors[i].modulus() != q) return false;
    sum += c.cofactors[i] * c.basis[i];
  }
  return sum == c.target;
}

DiffPoly s_polynomial(const DiffPoly& f, const DiffPoly& g) {
  if (f.modulus() != g.modulus()) throw UsageError("S-polynomial over different fields");
  if (f.is_zero() || g.is_zero()) return DiffPoly(f.modulus());
  const PrimeField& field = f.field();
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), field.inv(f.leading_coeff())) -
         g.mul_term(l / g.leading_monomial(), field.inv(g.leading_coeff()));
}

bool is_groebner_basis(std::span<const DiffPoly> polys) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (!reduce(s_polynomial(polys[i], polys[j]), polys).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(std::span<const DiffPoly> polys) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero() || polys[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      if (i == j) continue;
      const Monomial& lead = polys[j].leading_monomial();
      for (const auto& t : polys[i].terms()) {
        if (lead.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BuchbergerState {
 public:
  BuchbergerState(const BuchbergerOptions& options, BuchbergerStats* stats)
      : options_(options), stats_(stats) {}

  void insert(DiffPoly h) {
    polys_.push_back(h.monic());
    active_.push_back(true);
    update(polys_.size() - 1);
    refresh_reducers();
    if (stats_) {
      stats_->max_basis_size = std::max(stats_->max_basis_size, reducers_.size());
    }
  }

  DiffPoly reduce_active(const DiffPoly& p) const {
    return reduce_impl(p, reducers_, nullptr, options_.deadline);
  }

  bool has_pairs() const { return !pairs_.empty(); }

  // Normal strategy: smallest lcm first, oldest pair on ties.
  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (pairs_[k].lcm < pairs_[best].lcm) best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  const DiffPoly& poly(std::size_t i) const { return polys_[i]; }

  std::vector<DiffPoly> active_polys() const {
    std::vector<DiffPoly> out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) out.push_back(polys_[i]);
    }
    return out;
  }

 private:
  void refresh_reducers() {
    reducers_.clear();
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) reducers_.push_back(&polys_[i]);
    }
  }

  void update(std::size_t h) {
    const Monomial& lh = polys_[h].leading_monomial();
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    for (std::size_t g = 0; g < h; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].leading_monomial();
      c.push_back({g, lcm(lh, lg), lh.coprime(lg)});
    }

    // Chain criterion among the new pairs.
    std::vector<Candidate> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        }
        for (std::size_t b = 0; b < d.size() && keep; ++b) {
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[a]);
    }

    // Old pairs made superfluous by h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      bool keep = !lh.divides(p.lcm);
      if (!keep) {
        const Monomial li = lcm(polys_[p.i].leading_monomial(), lh);
        const Monomial lj = lcm(polys_[p.j].leading_monomial(), lh);
        keep = (li == p.lcm) || (lj == p.lcm);
      }
      if (keep) kept.push_back(std::move(p));
    }

    // Product criterion.
    for (auto& cand : d) {
      if (cand.coprime) continue;
      if (options_.degree_bound && cand.lcm.degree() > *options_.degree_bound) continue;
      kept.push_back({cand.g, h, std::move(cand.lcm)});
      if (stats_) ++stats_->pairs_created;
    }
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < h; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
  }

  const BuchbergerOptions& options_;
  BuchbergerStats* stats_;
  std::vector<DiffPoly> polys_;
  std::vector<bool> active_;
  std::vector<const DiffPoly*> reducers_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis buchberger(std::span<const DiffPoly> input, const BuchbergerOptions& options,
                         BuchbergerStats* stats) {
  if (input.empty()) throw UsageError("Groebner basis of an empty generator list");
  const std::uint32_t q = input.front().modulus();
  for (const auto& f : input) {
    if (f.modulus() != q) throw UsageError("generators over different fields");
    if (options.degree_bound && !f.is_homogeneous()) {
      throw UsageError("a degree-truncated basis needs homogeneous generators");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  BuchbergerState state(options, stats);
  std::vector<DiffPoly> pending;
  for (const auto& f : input) {
    if (!f.is_zero()) pending.push_back(f);
  }
  for (const auto& f : pending) {
    DiffPoly h = state.reduce_active(f);
    if (!h.is_zero()) state.insert(std::move(h));
  }
  while (state.has_pairs()) {
    check_deadline(options.deadline);
    const Pair p = state.pop_pair();
    if (stats) ++stats->pairs_reduced;
    DiffPoly h = state.reduce_active(s_polynomial(state.poly(p.i), state.poly(p.j)));
    if (h.is_zero()) {
      if (stats) ++stats->zero_reductions;
      continue;
    }
    state.insert(std::move(h));
  }

  // Interreduce the minimal basis.
  std::vector<DiffPoly> minimal = state.active_polys();
  std::sort(minimal.begin(), minimal.end(), [](const DiffPoly& a, const DiffPoly& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  std::vector<DiffPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const DiffPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(j < i ? &reduced[j] : &minimal[j]);
    }
    const DiffPoly& g = minimal[i];
    const DiffPoly lead = DiffPoly::from_term(q, g.leading_monomial(), 1);
    const DiffPoly tail = g - lead;
    reduced.push_back(lead + reduce_impl(tail, others, nullptr, options.deadline));
  }
  if (stats) stats->elapsed = std::chrono::steady_clock::now() - start;
  return GroebnerBasis(q, std::move(reduced), std::vector<DiffPoly>(input.begin(), input.end()),
                       options.degree_bound);
}

}  // namespace diffcong
