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

#include "diffcong/prover.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace diffcong {

std::vector<DiffPoly> build_beta(std::uint32_t q, Side side) {
  auto [first, second] = side == Side::kE ? base_relations_E(q) : base_relations_S(q);
  const unsigned top = side == Side::kE ? q - 2 : q - 1;
  std::vector<DiffPoly> beta;
  beta.reserve(2 * (top + 1));
  for (unsigned k = 0; k <= top; ++k) {
    beta.push_back(first);
    beta.push_back(second);
    first = derive(first);
    second = derive(second);
  }
  return beta;
}

std::string_view to_string(BasisSource source) {
  return source == BasisSource::kCache ? "cache" : "computed";
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kMagic = "diffcong-basis 1";

}  // namespace

std::string render_basis_file(const GroebnerBasis& basis, Side side) {
  std::ostringstream os;
  os << kMagic << '\n'
     << "tag " << kBasisFormatTag << '\n'
     << "q " << basis.modulus() << '\n'
     << "side " << to_string(side) << '\n'
     << "size " << basis.size() << '\n';
  for (const auto& g : basis) os << g.to_string() << '\n';
  return os.str();
}

std::optional<GroebnerBasis> parse_basis_file(std::string_view text, std::uint32_t q, Side side) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto expect = [&](const std::string& wanted) {
    return static_cast<bool>(std::getline(in, line)) && line == wanted;
  };
  if (!expect(std::string(kMagic))) return std::nullopt;
  if (!expect("tag " + std::string(kBasisFormatTag))) return std::nullopt;
  if (!expect("q " + std::to_string(q))) return std::nullopt;
  if (!expect("side " + std::string(to_string(side)))) return std::nullopt;
  if (!std::getline(in, line) || line.rfind("size ", 0) != 0) return std::nullopt;
  std::size_t count = 0;
  try {
    count = std::stoul(line.substr(5));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::vector<DiffPoly> gens;
  gens.reserve(count);
  try {
    while (gens.size() < count && std::getline(in, line)) gens.push_back(DiffPoly::parse(line, q));
  } catch (const UsageError&) {
    return std::nullopt;
  }
  if (gens.size() != count) return std::nullopt;
  return GroebnerBasis(q, std::move(gens));
}

std::filesystem::path BasisStore::path_for(std::uint32_t q, Side side) const {
  return dir_ / (std::to_string(q) + "_" + std::string(to_string(side)) + ".gb");
}

std::optional<GroebnerBasis> BasisStore::load(std::uint32_t q, Side side) const {
  std::ifstream in(path_for(q, side));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_basis_file(buf.str(), q, side);
}

void BasisStore::save(const GroebnerBasis& basis, Side side) const {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(basis.modulus(), side);
  // Write then rename so concurrent readers never see a partial file.
  auto tmp = target;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write basis cache file " + tmp.string());
    out << render_basis_file(basis, side);
  }
  std::filesystem::rename(tmp, target);
}

// ---------------------------------------------------------------------------

Prover::Prover(ProverOptions options) : options_(std::move(options)) {
  if (options_.cache_dir) {
    store_.emplace(*options_.cache_dir);
  } else if (const char* env = std::getenv("DIFFCONG_CACHE_DIR"); env && *env) {
    store_.emplace(env);
  }
}

std::shared_ptr<const GroebnerBasis> Prover::basis(
    std::uint32_t q, Side side, BasisSource* source,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  const auto key = std::make_pair(q, side);
  {
    std::shared_lock lock(mu_);
    if (auto it = bases_.find(key); it != bases_.end()) {
      if (source) *source = BasisSource::kCache;
      return it->second;
    }
  }

  std::shared_ptr<const GroebnerBasis> found;
  BasisSource origin = BasisSource::kComputed;
  if (store_ && !options_.recompute) {
    if (auto loaded = store_->load(q, side)) {
      found = std::make_shared<const GroebnerBasis>(std::move(*loaded));
      origin = BasisSource::kCache;
    }
  }
  if (!found) {
    const std::vector<DiffPoly> beta = build_beta(q, side);
    ++buchberger_calls_;
    found = std::make_shared<const GroebnerBasis>(buchberger(beta, {deadline}));
    if (store_) store_->save(*found, side);
  }
  {
    std::unique_lock lock(mu_);
    bases_[key] = found;
  }
  if (source) *source = origin;
  return found;
}

std::shared_ptr<const GroebnerBasis> Prover::truncated_basis(
    std::uint32_t q, Side side, unsigned degree, BasisSource* source,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (side != Side::kE) throw UsageError("truncated bases exist for the E side only");
  const auto key = std::make_pair(q, side);
  {
    std::shared_lock lock(mu_);
    if (auto it = bases_.find(key); it != bases_.end()) {
      if (source) *source = BasisSource::kCache;
      return it->second;
    }
    if (auto it = truncated_.find(key);
        it != truncated_.end() && *it->second->degree_bound() >= degree) {
      if (source) *source = BasisSource::kCache;
      return it->second;
    }
  }
  ++buchberger_calls_;
  auto found =
      std::make_shared<const GroebnerBasis>(buchberger(build_beta(q, side), {deadline, degree}));
  {
    std::unique_lock lock(mu_);
    auto& slot = truncated_[key];
    if (!slot || *slot->degree_bound() < degree) slot = found;
  }
  if (source) *source = BasisSource::kComputed;
  return found;
}

ProofResult Prover::prove(const CongruenceSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  ProofResult result;
  result.spec = spec;
  auto finish = [&]() -> ProofResult {
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  };

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (options_.timeout) deadline = start + *options_.timeout;

  DiffPoly target(5);
  try {
    result.spec = spec.normalized();
    target = build_target(result.spec);
  } catch (const UsageError& e) {
    result.error = e.what();
    return finish();
  }

  std::shared_ptr<const GroebnerBasis> gb;
  try {
    if (options_.truncated) {
      gb = truncated_basis(result.spec.q, result.spec.side(), target.total_degree(),
                           &result.basis_source, deadline);
    } else {
      gb = basis(result.spec.q, result.spec.side(), &result.basis_source, deadline);
    }
  } catch (const std::exception& e) {
    result.error = e.what();
    return finish();
  }

  result.degree_bound = gb->degree_bound();
  result.certificate = normal_form(target, *gb);
  result.proved =
      result.certificate->proves_membership() && verify_certificate(*result.certificate);
  return finish();
}

std::vector<ProofResult> Prover::prove_batch(std::span<const CongruenceSpec> specs) {
  std::vector<ProofResult> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(prove(s));
  return out;
}

}  // namespace diffcong
