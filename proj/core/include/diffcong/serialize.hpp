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

// Versioned JSON for specs and certificates. Polynomials are stored in
// their canonical text rendering, so a certificate can be checked with
// nothing but polynomial arithmetic.

#ifndef DIFFCONG_SERIALIZE_HPP_
#define DIFFCONG_SERIALIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffcong/groebner.hpp"
#include "diffcong/prover.hpp"
#include "diffcong/relations.hpp"
#include "diffcong/search.hpp"

namespace diffcong {

inline constexpr std::string_view kCertificateFormat = "diffcong-certificate";
inline constexpr int kCertificateVersion = 1;

struct CertificateFile {
  CongruenceSpec spec;
  Side side = Side::kE;
  bool proved = false;
  Certificate certificate;
  // Set when the basis was truncated at this degree.
  std::optional<unsigned> degree_bound;

  friend bool operator==(const CertificateFile& a, const CertificateFile& b);
};

std::string spec_to_json(const CongruenceSpec& spec);
// Throws UsageError on malformed input.
CongruenceSpec spec_from_json(std::string_view text);

std::string certificate_to_json(const CertificateFile& file);
CertificateFile certificate_from_json(std::string_view text);

// Output of one search command. Exactly one of pairs, bases, weights is
// populated, chosen by family.
struct SearchTable {
  Family family = Family::kRamanujan;
  Series series = Series::kPartition;
  std::uint32_t q = 0;
  std::size_t bound = 0;
  std::vector<RamanujanPair> pairs;
  std::vector<LinCombBasis> bases;
  std::vector<WeightPoly2> weights;
  // One entry per pair, basis row (flattened in order) or weight, when the
  // search was run with proving enabled.
  std::optional<std::vector<bool>> proved;

  std::size_t entry_count() const;
  // The spec for entry i, in the same order as proved.
  CongruenceSpec entry_spec(std::size_t i) const;

  friend bool operator==(const SearchTable& a, const SearchTable& b);
};

inline constexpr std::string_view kTableFormat = "diffcong-table";
inline constexpr int kTableVersion = 1;

std::string table_to_json(const SearchTable& table);
SearchTable table_from_json(std::string_view text);

// Requires result.certificate.
CertificateFile certificate_file(const ProofResult& result);

}  // namespace diffcong

#endif  // DIFFCONG_SERIALIZE_HPP_
