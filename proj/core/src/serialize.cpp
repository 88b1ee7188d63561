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

#include "diffcong/serialize.hpp"

#include <stdexcept>

#include <json.hpp>

namespace diffcong {

using nlohmann::json;

bool operator==(const CertificateFile& a, const CertificateFile& b) {
  return a.spec == b.spec && a.side == b.side && a.proved == b.proved &&
         a.degree_bound == b.degree_bound && a.certificate.target == b.certificate.target &&
         a.certificate.basis == b.certificate.basis &&
         a.certificate.cofactors == b.certificate.cofactors &&
         a.certificate.remainder == b.certificate.remainder;
}

namespace {

json spec_json(const CongruenceSpec& s) {
  json j;
  j["family"] = std::string(to_string(s.family));
  j["series"] = std::string(to_string(s.series));
  j["q"] = s.q;
  switch (s.family) {
    case Family::kRamanujan:
      j["k"] = s.k;
      j["r"] = s.r;
      break;
    case Family::kLinComb:
      j["r"] = s.r;
      j["coeffs"] = s.coeffs;
      break;
    case Family::kWeighted2: j["weight"] = s.weight ? s.weight->to_string() : std::string(); break;
  }
  return j;
}

CongruenceSpec spec_from(const json& j) {
  const Family family = parse_family(j.at("family").get<std::string>());
  const Series series = parse_series(j.at("series").get<std::string>());
  const auto q = j.at("q").get<std::uint32_t>();
  require_supported_prime(q);
  switch (family) {
    case Family::kRamanujan:
      return CongruenceSpec::ramanujan(series, q, j.at("k").get<std::int64_t>(),
                                       j.at("r").get<std::uint32_t>());
    case Family::kLinComb:
      return CongruenceSpec::lincomb(series, q, j.at("r").get<std::uint32_t>(),
                                     j.at("coeffs").get<std::vector<std::uint32_t>>());
    case Family::kWeighted2:
      return CongruenceSpec::weighted2(series, q,
                                       WeightPoly2::parse(j.at("weight").get<std::string>(), q));
  }
  throw UsageError("unknown congruence family");
}

json poly_list(std::span<const DiffPoly> polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

std::vector<DiffPoly> parse_poly_list(const json& j, std::uint32_t q) {
  std::vector<DiffPoly> out;
  for (const auto& item : j) out.push_back(DiffPoly::parse(item.get<std::string>(), q));
  return out;
}

template <typename Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string spec_to_json(const CongruenceSpec& spec) { return spec_json(spec).dump(); }

CongruenceSpec spec_from_json(std::string_view text) {
  return guarded([&] { return spec_from(json::parse(text)); });
}

std::string certificate_to_json(const CertificateFile& file) {
  const Certificate& c = file.certificate;
  json j;
  j["format"] = std::string(kCertificateFormat);
  j["version"] = kCertificateVersion;
  j["order"] = std::string(kBasisFormatTag);
  j["q"] = c.target.modulus();
  j["side"] = std::string(to_string(file.side));
  j["spec"] = spec_json(file.spec);
  j["proved"] = file.proved;
  j["target"] = c.target.to_string();
  j["basis"] = poly_list(c.basis);
  j["cofactors"] = poly_list(c.cofactors);
  j["remainder"] = c.remainder.to_string();
  if (file.degree_bound) j["degree_bound"] = *file.degree_bound;
  return j.dump(2) + "\n";
}

CertificateFile certificate_from_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != kCertificateFormat) {
      throw UsageError("not a diffcong certificate");
    }
    if (j.at("version").get<int>() != kCertificateVersion) {
      throw UsageError("unsupported certificate version " + j.at("version").dump());
    }
    const auto q = j.at("q").get<std::uint32_t>();
    require_supported_prime(q);
    CertificateFile file{
        spec_from(j.at("spec")), parse_side(j.at("side").get<std::string>()),
        j.at("proved").get<bool>(),
        Certificate{DiffPoly::parse(j.at("target").get<std::string>(), q),
                    parse_poly_list(j.at("basis"), q), parse_poly_list(j.at("cofactors"), q),
                    DiffPoly::parse(j.at("remainder").get<std::string>(), q)}};
    if (file.spec.q != q) throw UsageError("certificate q does not match its spec");
    if (j.contains("degree_bound")) file.degree_bound = j.at("degree_bound").get<unsigned>();
    return file;
  });
}

std::size_t SearchTable::entry_count() const {
  switch (family) {
    case Family::kRamanujan: return pairs.size();
    case Family::kLinComb: {
      std::size_t n = 0;
      for (const auto& b : bases) n += b.rows.size();
      return n;
    }
    case Family::kWeighted2: return weights.size();
  }
  return 0;
}

CongruenceSpec SearchTable::entry_spec(std::size_t i) const {
  switch (family) {
    case Family::kRamanujan:
      return CongruenceSpec::ramanujan(series, q, pairs.at(i).k, pairs.at(i).r);
    case Family::kLinComb:
      for (const auto& b : bases) {
        if (i < b.rows.size()) return CongruenceSpec::lincomb(series, q, b.r, b.rows[i]);
        i -= b.rows.size();
      }
      throw std::out_of_range("search table entry");
    case Family::kWeighted2: return CongruenceSpec::weighted2(series, q, weights.at(i));
  }
  throw std::out_of_range("search table entry");
}

bool operator==(const SearchTable& a, const SearchTable& b) {
  if (a.family != b.family || a.series != b.series || a.q != b.q || a.bound != b.bound ||
      a.pairs != b.pairs || a.weights != b.weights || a.proved != b.proved ||
      a.bases.size() != b.bases.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.bases.size(); ++i) {
    const auto& x = a.bases[i];
    const auto& y = b.bases[i];
    if (x.q != y.q || x.r != y.r || x.series != y.series || x.rows != y.rows) return false;
  }
  return true;
}

std::string table_to_json(const SearchTable& t) {
  json j;
  j["format"] = std::string(kTableFormat);
  j["version"] = kTableVersion;
  j["family"] = std::string(to_string(t.family));
  j["series"] = std::string(to_string(t.series));
  j["q"] = t.q;
  j["N"] = t.bound;
  switch (t.family) {
    case Family::kRamanujan: {
      json pairs = json::array();
      for (const auto& p : t.pairs) pairs.push_back({{"k", p.k}, {"r", p.r}});
      j["pairs"] = std::move(pairs);
      break;
    }
    case Family::kLinComb: {
      json bases = json::array();
      for (const auto& b : t.bases) bases.push_back({{"r", b.r}, {"rows", b.rows}});
      j["bases"] = std::move(bases);
      break;
    }
    case Family::kWeighted2: {
      json weights = json::array();
      for (const auto& w : t.weights) weights.push_back(w.to_string());
      j["weights"] = std::move(weights);
      break;
    }
  }
  if (t.proved) j["proved"] = *t.proved;
  return j.dump(2) + "\n";
}

SearchTable table_from_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != kTableFormat) {
      throw UsageError("not a diffcong search table");
    }
    if (j.at("version").get<int>() != kTableVersion) {
      throw UsageError("unsupported table version " + j.at("version").dump());
    }
    SearchTable t;
    t.family = parse_family(j.at("family").get<std::string>());
    t.series = parse_series(j.at("series").get<std::string>());
    t.q = j.at("q").get<std::uint32_t>();
    require_supported_prime(t.q);
    t.bound = j.at("N").get<std::size_t>();
    switch (t.family) {
      case Family::kRamanujan:
        for (const auto& p : j.at("pairs")) {
          t.pairs.push_back({p.at("k").get<unsigned>(), p.at("r").get<std::uint32_t>()});
        }
        break;
      case Family::kLinComb:
        for (const auto& b : j.at("bases")) {
          t.bases.push_back({t.q, b.at("r").get<std::uint32_t>(), t.series,
                             b.at("rows").get<std::vector<linalg::Vector>>()});
        }
        break;
      case Family::kWeighted2:
        for (const auto& w : j.at("weights")) {
          t.weights.push_back(WeightPoly2::parse(w.get<std::string>(), t.q));
        }
        break;
    }
    if (j.contains("proved")) {
      t.proved = j.at("proved").get<std::vector<bool>>();
      if (t.proved->size() != t.entry_count()) {
        throw UsageError("proved annotations do not match the table entries");
      }
    }
    return t;
  });
}

CertificateFile certificate_file(const ProofResult& result) {
  if (!result.certificate) throw UsageError("proof result carries no certificate");
  return {result.spec, result.spec.side(), result.proved, *result.certificate, result.degree_bound};
}

}  // namespace diffcong
