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

#ifndef DIFFCONG_PROVER_HPP_
#define DIFFCONG_PROVER_HPP_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffcong/groebner.hpp"
#include "diffcong/relations.hpp"

namespace diffcong {

// Tag written into cache files; bump when the term order or the base
// relations change.
inline constexpr std::string_view kBasisFormatTag = "grevlex-x0-last;relations-1";

// E side: d^k B1, d^k B2 for 0 <= k <= q-2. S side: d^k B3, d^k B4 for
// 0 <= k <= q-1. Interleaved by k.
std::vector<DiffPoly> build_beta(std::uint32_t q, Side side);

enum class BasisSource { kComputed, kCache };
std::string_view to_string(BasisSource source);

// On-disk store of bases as `<dir>/<q>_<side>.gb`.
class BasisStore {
 public:
  explicit BasisStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(std::uint32_t q, Side side) const;

  // nullopt when missing, unreadable or written by an incompatible version.
  std::optional<GroebnerBasis> load(std::uint32_t q, Side side) const;
  void save(const GroebnerBasis& basis, Side side) const;

 private:
  std::filesystem::path dir_;
};

// Text form used by BasisStore.
std::string render_basis_file(const GroebnerBasis& basis, Side side);
std::optional<GroebnerBasis> parse_basis_file(std::string_view text, std::uint32_t q, Side side);

struct ProverOptions {
  // Wall-clock limit per proof, including any basis computation.
  std::optional<std::chrono::milliseconds> timeout;
  // Disk cache; when unset, DIFFCONG_CACHE_DIR is consulted, and without
  // it bases live in memory only.
  std::optional<std::filesystem::path> cache_dir;
  // Ignore bases on disk; each (q, side) is computed once per Prover.
  bool recompute = false;
  // Reduce by a basis truncated at the target's degree instead of the full
  // basis. Needs homogeneous base relations, so partition specs only.
  // Truncated bases are kept in memory, never on disk.
  bool truncated = false;
};

struct ProofResult {
  CongruenceSpec spec;
  bool proved = false;
  std::optional<Certificate> certificate;
  BasisSource basis_source = BasisSource::kComputed;
  // Degree bound of the basis used, when truncated.
  std::optional<unsigned> degree_bound;
  std::chrono::duration<double> elapsed{0};
  // Set when the spec was rejected or the run timed out.
  std::string error;
};

class Prover {
 public:
  explicit Prover(ProverOptions options = {});

  ProofResult prove(const CongruenceSpec& spec);
  // Results in input order; errors are recorded per spec.
  std::vector<ProofResult> prove_batch(std::span<const CongruenceSpec> specs);

  // Basis for (q, side) from memory, disk or a fresh computation.
  std::shared_ptr<const GroebnerBasis> basis(
      std::uint32_t q, Side side, BasisSource* source = nullptr,
      std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

  // Basis truncated at `degree` (E side only), reusing any stored basis of
  // at least that degree.
  std::shared_ptr<const GroebnerBasis> truncated_basis(
      std::uint32_t q, Side side, unsigned degree, BasisSource* source = nullptr,
      std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

  std::size_t buchberger_calls() const { return buchberger_calls_.load(); }
  const std::optional<BasisStore>& store() const { return store_; }

 private:
  ProverOptions options_;
  std::optional<BasisStore> store_;
  std::shared_mutex mu_;
  std::map<std::pair<std::uint32_t, Side>, std::shared_ptr<const GroebnerBasis>> bases_;
  std::map<std::pair<std::uint32_t, Side>, std::shared_ptr<const GroebnerBasis>> truncated_;
  std::atomic<std::size_t> buchberger_calls_{0};
};

}  // namespace diffcong

#endif  // DIFFCONG_PROVER_HPP_
