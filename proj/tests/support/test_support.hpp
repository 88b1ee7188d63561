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

// Shared helpers for the test binaries: brute-force reference
// computations, seeded generators and golden-file readers.

#ifndef DIFFCONG_TESTS_SUPPORT_HPP_
#define DIFFCONG_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diffcong/diffpoly.hpp"
#include "diffcong/linalg.hpp"
#include "diffcong/oracle.hpp"
#include "diffcong/relations.hpp"
#include "diffcong/search.hpp"

namespace diffcong::testing {

inline std::filesystem::path data_dir() { return DIFFCONG_TEST_DATA_DIR; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_dir() / name);
  if (!in) throw std::runtime_error("missing test data file " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("diffcong_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// ---------------------------------------------------------------------------
// Reference computations, written for obviousness rather than speed.

// Partition counts mod q by the parts-at-most-m dynamic program.
inline std::vector<std::uint32_t> naive_partitions(std::uint32_t q, std::size_t length) {
  std::vector<std::uint64_t> ways(length, 0);
  if (length > 0) ways[0] = 1;
  for (std::size_t part = 1; part < length; ++part) {
    for (std::size_t n = part; n < length; ++n) ways[n] = (ways[n] + ways[n - part]) % q;
  }
  return {ways.begin(), ways.end()};
}

// Exact partition counts for small n.
inline std::vector<std::uint64_t> exact_partitions(std::size_t length) {
  std::vector<std::uint64_t> ways(length, 0);
  if (length > 0) ways[0] = 1;
  for (std::size_t part = 1; part < length; ++part) {
    for (std::size_t n = part; n < length; ++n) ways[n] += ways[n - part];
  }
  return ways;
}

// Divisor sum by trial division; power 1 or 3, optional parity filter
// (0 = all, 1 = odd divisors, 2 = even divisors).
inline std::uint64_t naive_sigma(std::uint64_t n, unsigned power = 1, int parity = 0) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    if (parity == 1 && d % 2 == 0) continue;
    if (parity == 2 && d % 2 == 1) continue;
    std::uint64_t t = 1;
    for (unsigned i = 0; i < power; ++i) t *= d;
    s += t;
  }
  return s;
}

inline std::vector<std::uint32_t> naive_convolve(std::span<const std::uint32_t> a,
                                                 std::span<const std::uint32_t> b,
                                                 std::uint32_t q) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<std::uint32_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % q);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators. All callers seed their engines with fixed constants.

using Rng = std::mt19937_64;

inline std::uint32_t uniform(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

inline Monomial random_monomial(Rng& rng, std::uint32_t q, unsigned max_degree) {
  Monomial m(q);
  const unsigned degree = uniform(rng, 0, max_degree);
  for (unsigned i = 0; i < degree; ++i) {
    const auto k = uniform(rng, 0, q - 1);
    m.set(k, m[k] + 1);
  }
  return m;
}

inline DiffPoly random_poly(Rng& rng, std::uint32_t q, std::size_t max_terms, unsigned max_degree) {
  std::vector<Term> terms;
  const std::size_t n = uniform(rng, 0, static_cast<std::uint32_t>(max_terms));
  for (std::size_t i = 0; i < n; ++i) {
    terms.push_back({random_monomial(rng, q, max_degree), uniform(rng, 1, q - 1)});
  }
  return DiffPoly::from_terms(q, std::move(terms));
}

inline Series random_series(Rng& rng) {
  return uniform(rng, 0, 1) ? Series::kDivisor : Series::kPartition;
}

inline WeightPoly2 random_weight(Rng& rng, std::uint32_t q, std::size_t max_terms) {
  std::vector<WeightTerm> terms;
  const std::size_t n = uniform(rng, 1, static_cast<std::uint32_t>(max_terms));
  for (std::size_t i = 0; i < n; ++i) {
    terms.push_back({uniform(rng, 0, q - 1), uniform(rng, 0, q - 1), uniform(rng, 1, q - 1)});
  }
  WeightPoly2 w(q, std::move(terms));
  if (w.empty()) return WeightPoly2(q, {{1, 1, 1}});
  return w;
}

inline CongruenceSpec random_spec(Rng& rng, std::uint32_t q) {
  const Series series = random_series(rng);
  switch (uniform(rng, 0, 2)) {
    case 0:
      return CongruenceSpec::ramanujan(series, q, uniform(rng, 1, q - 1), uniform(rng, 0, q - 1));
    case 1: {
      std::vector<std::uint32_t> c(q - 1);
      // Sparse vectors hit valid congruences far more often.
      for (auto& x : c) x = uniform(rng, 0, 2) == 0 ? uniform(rng, 1, q - 1) : 0;
      if (std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; })) c[0] = 1;
      return CongruenceSpec::lincomb(series, q, uniform(rng, 0, q - 1), std::move(c));
    }
    default: return CongruenceSpec::weighted2(series, q, random_weight(rng, q, 4));
  }
}

// ---------------------------------------------------------------------------
// Golden tables.

struct RamanujanGolden {
  Series series;
  std::uint32_t q;
  std::vector<RamanujanPair> pairs;
};

inline std::vector<RamanujanGolden> load_ramanujan_golden() {
  std::vector<RamanujanGolden> out;
  std::istringstream in(read_data("ramanujan_pairs.txt"));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    std::istringstream head(line.substr(0, colon));
    std::string series;
    RamanujanGolden g{};
    head >> series >> g.q;
    g.series = parse_series(series);
    std::istringstream body(line.substr(colon + 1));
    for (std::string pair; body >> pair;) {
      const auto comma = pair.find(',');
      g.pairs.push_back({static_cast<unsigned>(std::stoul(pair.substr(0, comma))),
                         static_cast<std::uint32_t>(std::stoul(pair.substr(comma + 1)))});
    }
    out.push_back(std::move(g));
  }
  return out;
}

struct LinCombGolden {
  std::uint32_t q;
  std::uint32_t r;
  // As printed; q = 11 rows have 7 entries.
  std::vector<linalg::Vector> rows;
};

inline std::vector<LinCombGolden> load_lincomb_golden() {
  std::vector<LinCombGolden> out;
  std::istringstream in(read_data("lincomb_divisor.txt"));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    std::istringstream head(line.substr(0, colon));
    LinCombGolden g{};
    head >> g.q >> g.r;
    std::istringstream body(line.substr(colon + 1));
    for (std::string row; body >> row;) {
      linalg::Vector v;
      std::istringstream cells(row);
      for (std::string cell; std::getline(cells, cell, ',');) v.push_back(std::stoul(cell));
      g.rows.push_back(std::move(v));
    }
    out.push_back(std::move(g));
  }
  return out;
}

struct WeightGolden {
  Series series;
  std::uint32_t q;
  std::vector<std::string> weights;
};

inline std::vector<WeightGolden> load_weight_golden() {
  std::vector<WeightGolden> out;
  std::istringstream in(read_data("weights.txt"));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    std::istringstream head(line.substr(0, colon));
    std::string series;
    WeightGolden g{};
    head >> series >> g.q;
    g.series = parse_series(series);
    std::istringstream body(line.substr(colon + 1));
    for (std::string w; std::getline(body, w, ';');) {
      const auto first = w.find_first_not_of(' ');
      g.weights.push_back(w.substr(first));
    }
    out.push_back(std::move(g));
  }
  return out;
}

// Lines of a basis file body (after the header) or a plain polynomial list.
inline std::vector<DiffPoly> load_poly_lines(const std::string& name, std::uint32_t q,
                                             std::size_t skip = 0) {
  std::vector<DiffPoly> out;
  std::istringstream in(read_data(name));
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line); ++lineno) {
    if (lineno < skip || line.empty()) continue;
    out.push_back(DiffPoly::parse(line, q));
  }
  return out;
}

}  // namespace diffcong::testing

#endif  // DIFFCONG_TESTS_SUPPORT_HPP_
