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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffcong/oracle.hpp"
#include "diffcong/prover.hpp"
#include "diffcong/relations.hpp"
#include "diffcong/search.hpp"
#include "diffcong/serialize.hpp"

namespace diffcong::cli {
namespace {

using nlohmann::json;

enum class Output { kText, kJson };

struct Common {
  std::size_t bound = kDefaultBound;
  std::string cache_dir;
  Output output = Output::kText;
  long timeout_ms = 0;
  unsigned jobs = 1;
  bool truncate = false;
};

struct SpecFlags {
  std::uint32_t q = 0;
  std::string series;
  std::int64_t k = 0;
  std::uint32_t r = 0;
  std::string coeffs;
  std::string weight;
};

// Raised for problems with files named on the command line.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path cache_path(const Common& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* env = std::getenv("DIFFCONG_CACHE_DIR"); env && *env) return env;
  return "cache";
}

ProverOptions prover_options(const Common& c, bool recompute = false) {
  ProverOptions o;
  o.cache_dir = cache_path(c);
  o.recompute = recompute;
  o.truncated = c.truncate;
  if (c.timeout_ms > 0) o.timeout = std::chrono::milliseconds(c.timeout_ms);
  return o;
}

void add_common(CLI::App* app, Common& c, bool with_cache = true) {
  app->add_option("--N", c.bound, "Verification bound (largest index checked)")
      ->check(CLI::PositiveNumber);
  app->add_option("--output", c.output, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Output>{{"text", Output::kText}, {"json", Output::kJson}}));
  if (with_cache) {
    app->add_option("--cache-dir", c.cache_dir,
                    "Basis cache directory (default: $DIFFCONG_CACHE_DIR, else ./cache)");
    app->add_option("--timeout", c.timeout_ms, "Per-proof wall-clock limit in milliseconds")
        ->check(CLI::NonNegativeNumber);
  }
}

void add_q(CLI::App* app, SpecFlags& f, bool required = true) {
  auto* opt = app->add_option("--q", f.q, "Prime modulus q > 3");
  if (required) opt->required();
}

void add_series(CLI::App* app, SpecFlags& f, const std::string& fallback) {
  f.series = fallback;
  app->add_option("--series", f.series, "partition or divisor")
      ->check(CLI::IsMember({"partition", "divisor"}))
      ->capture_default_str();
}

std::vector<std::uint32_t> parse_coeffs(const std::string& text, std::uint32_t q) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    std::uint32_t v = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw UsageError("bad coefficient '" + item + "'");
    }
    if (v >= q)
      throw UsageError("coefficient " + item + " is not reduced mod " + std::to_string(q));
    out.push_back(v);
  }
  if (out.size() != q - 1) {
    throw UsageError("expected " + std::to_string(q - 1) + " coefficients, got " +
                     std::to_string(out.size()));
  }
  return out;
}

CongruenceSpec make_spec(Family family, const SpecFlags& f) {
  require_supported_prime(f.q);
  const Series series = parse_series(f.series);
  CongruenceSpec spec;
  switch (family) {
    case Family::kRamanujan: spec = CongruenceSpec::ramanujan(series, f.q, f.k, f.r); break;
    case Family::kLinComb:
      spec = CongruenceSpec::lincomb(series, f.q, f.r, parse_coeffs(f.coeffs, f.q));
      break;
    case Family::kWeighted2:
      spec = CongruenceSpec::weighted2(series, f.q, WeightPoly2::parse(f.weight, f.q));
      break;
  }
  spec.validate();
  return spec;
}

std::string slug(std::string s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += c;
    } else if (c == '+' || c == ',') {
      out += '_';
    }
  }
  return out;
}

std::filesystem::path default_cert_path(const CongruenceSpec& s) {
  std::string name = "cert_" + std::string(to_string(s.family)) + "_" +
                     std::string(to_string(s.series)) + "_q" + std::to_string(s.q);
  switch (s.family) {
    case Family::kRamanujan: name += "_k" + std::to_string(s.k) + "_r" + std::to_string(s.r); break;
    case Family::kLinComb: {
      name += "_r" + std::to_string(s.r) + "_c";
      for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        name += (i ? "-" : "") + std::to_string(s.coeffs[i]);
      }
      break;
    }
    case Family::kWeighted2: name += "_w" + slug(s.weight->to_string()); break;
  }
  return name + ".json";
}

std::string seconds(std::chrono::duration<double> d) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << d.count() << " s";
  return os.str();
}

std::string row_text(std::span<const std::uint32_t> row) {
  std::string s = "(";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? ", " : "") + std::to_string(row[i]);
  return s + ")";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out || !(out << text)) throw InputError("cannot write " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads; rethrows the first
// exception.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < n;) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------
// prove

struct ProveArgs {
  Common common;
  SpecFlags flags;
  std::string cert;
  bool no_cert = false;
};

void require_truncatable(const Common& c, Series series) {
  if (c.truncate && side_of(series) != Side::kE) {
    throw UsageError("--truncate applies to the partition series only");
  }
}

int cmd_prove(Family family, const ProveArgs& a, std::ostream& out) {
  const CongruenceSpec spec = make_spec(family, a.flags);
  require_truncatable(a.common, spec.series);
  Prover prover(prover_options(a.common));
  const ProofResult res = prover.prove(spec);

  std::optional<std::filesystem::path> cert_path;
  if (res.proved && !a.no_cert) {
    cert_path = a.cert.empty() ? default_cert_path(res.spec) : std::filesystem::path(a.cert);
    write_file(*cert_path, certificate_to_json(certificate_file(res)));
  }
  std::optional<std::size_t> counterexample;
  if (!res.proved && res.error.empty()) {
    counterexample = check_spec(res.spec, a.common.bound).counterexample;
  }

  if (a.common.output == Output::kJson) {
    json j;
    j["spec"] = json::parse(spec_to_json(res.spec));
    j["proved"] = res.proved;
    j["basis_source"] = std::string(to_string(res.basis_source));
    j["elapsed_s"] = res.elapsed.count();
    j["certificate_file"] = cert_path ? json(cert_path->string()) : json(nullptr);
    if (res.certificate) {
      j["remainder_terms"] = res.certificate->remainder.size();
      if (!res.certificate->remainder.is_zero()) {
        j["remainder_leading"] =
            DiffPoly::from_terms(res.spec.q, {res.certificate->remainder.terms().front()})
                .to_string();
      }
    }
    if (res.degree_bound) j["degree_bound"] = *res.degree_bound;
    if (counterexample) j["counterexample"] = *counterexample;
    if (!res.error.empty()) j["error"] = res.error;
    out << j.dump(2) << '\n';
  } else {
    out << (res.proved ? "proved: " : "not proved: ") << res.spec.to_string() << '\n';
    if (!res.error.empty()) out << "  error: " << res.error << '\n';
    if (res.certificate) {
      out << "  basis: " << to_string(res.basis_source) << ", " << res.certificate->basis.size()
          << " polynomials";
      if (res.degree_bound) out << " (truncated at degree " << *res.degree_bound << ")";
      out << ", " << seconds(res.elapsed) << '\n';
      const DiffPoly& rem = res.certificate->remainder;
      if (!rem.is_zero()) {
        out << "  remainder: " << rem.size() << " terms, leading "
            << DiffPoly::from_terms(res.spec.q, {rem.terms().front()}).to_string() << '\n';
      }
    }
    if (cert_path) out << "  certificate: " << cert_path->string() << '\n';
    if (counterexample) out << "  oracle counterexample at n=" << *counterexample << '\n';
  }
  return res.proved ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  Common common;
  SpecFlags flags;
  bool prove = false;
  bool has_r = false;
  unsigned max_terms = 0;
};

void annotate(SearchTable& table, const Common& common) {
  const std::size_t n = table.entry_count();
  std::vector<bool> proved(n, false);
  Prover prover(prover_options(common));
  if (n > 0) prover.basis(table.q, side_of(table.series));
  std::vector<char> flags(n, 0);
  parallel_for(n, common.jobs,
               [&](std::size_t i) { flags[i] = prover.prove(table.entry_spec(i)).proved ? 1 : 0; });
  for (std::size_t i = 0; i < n; ++i) proved[i] = flags[i] != 0;
  table.proved = std::move(proved);
}

void print_table(const SearchTable& t, std::ostream& out) {
  auto mark = [&](std::size_t i) -> std::string {
    if (!t.proved) return "";
    return (*t.proved)[i] ? "  proved" : "  NOT PROVED";
  };
  std::size_t idx = 0;
  switch (t.family) {
    case Family::kRamanujan:
      if (t.pairs.empty()) out << "no pairs\n";
      for (const auto& p : t.pairs) {
        out << "(" << p.k << ", " << p.r << ")" << mark(idx++) << '\n';
      }
      break;
    case Family::kLinComb:
      for (const auto& b : t.bases) {
        out << "r=" << b.r << (b.rows.empty() ? "  (trivial)" : "") << '\n';
        for (const auto& row : b.rows) out << "  " << row_text(row) << mark(idx++) << '\n';
      }
      break;
    case Family::kWeighted2:
      if (t.weights.empty()) out << "no weights\n";
      for (const auto& w : t.weights) out << w.to_string() << mark(idx++) << '\n';
      break;
  }
}

int cmd_search(Family family, const SearchArgs& a, std::ostream& out) {
  const std::uint32_t q = a.flags.q;
  require_supported_prime(q);
  const Series series = parse_series(a.flags.series);
  if (a.has_r && a.flags.r >= q) throw UsageError("residue must lie in [0, q)");
  require_truncatable(a.common, series);
  SearchTable table{family, series, q, a.common.bound, {}, {}, {}, std::nullopt};
  switch (family) {
    case Family::kRamanujan: table.pairs = search_ramanujan(q, series, a.common.bound); break;
    case Family::kLinComb: {
      std::vector<std::uint32_t> residues;
      if (a.has_r) {
        residues.push_back(a.flags.r);
      } else {
        for (std::uint32_t r = 0; r < q; ++r) residues.push_back(r);
      }
      table.bases.resize(residues.size());
      parallel_for(residues.size(), a.common.jobs, [&](std::size_t i) {
        table.bases[i] = search_lincomb(q, residues[i], series, a.common.bound);
      });
      break;
    }
    case Family::kWeighted2:
      if (a.max_terms > q - 2) {
        throw UsageError("--max-terms must be at most q-2 = " + std::to_string(q - 2));
      }
      table.weights = search_weighted2(q, series, a.max_terms, a.common.bound);
      break;
  }
  if (a.prove) annotate(table, a.common);

  if (a.common.output == Output::kJson) {
    out << table_to_json(table);
  } else {
    print_table(table, out);
  }
  if (table.proved &&
      std::find(table.proved->begin(), table.proved->end(), false) != table.proved->end()) {
    return kFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify_section5(const Common& c, const SpecFlags& f, bool has_q, std::ostream& out) {
  if (has_q) require_supported_prime(f.q);
  const DivisorCheckReport report = verify_section5(c.bound);
  if (c.output == Output::kJson) {
    json items = json::array();
    for (const auto& it : report.items) {
      items.push_back({{"id", it.id},
                       {"description", it.description},
                       {"passed", it.passed},
                       {"detail", it.detail}});
    }
    out << json{{"N", report.bound}, {"passed", report.all_passed()}, {"items", items}}.dump(2)
        << '\n';
  } else {
    for (const auto& it : report.items) {
      out << (it.passed ? "PASS" : "FAIL") << " (" << it.id << ") " << it.description;
      if (!it.detail.empty()) out << ": " << it.detail;
      out << '\n';
    }
  }
  return report.all_passed() ? kOk : kFailed;
}

int cmd_verify_congruence(const Common& c, const SpecFlags& f, bool has_k, bool has_r,
                          std::ostream& out) {
  Family family = Family::kRamanujan;
  if (!f.weight.empty()) {
    family = Family::kWeighted2;
  } else if (!f.coeffs.empty()) {
    family = Family::kLinComb;
  } else if (!has_k) {
    throw UsageError("give --k, --coeffs or --w");
  }
  if (family != Family::kWeighted2 && !has_r) throw UsageError("--r is required");
  const CongruenceSpec spec = make_spec(family, f).normalized();
  const CongruenceCheck check = check_spec(spec, c.bound);
  if (c.output == Output::kJson) {
    json j{{"spec", json::parse(spec_to_json(spec))}, {"N", c.bound}, {"holds", check.holds}};
    if (check.counterexample) j["counterexample"] = *check.counterexample;
    out << j.dump(2) << '\n';
  } else if (check.holds) {
    out << "holds: " << spec.to_string() << " for every index <= " << c.bound << '\n';
  } else {
    out << "fails: " << spec.to_string() << ", counterexample at n=" << *check.counterexample
        << '\n';
  }
  return check.holds ? kOk : kFailed;
}

int cmd_verify_certificate(const Common& c, const std::string& file, std::ostream& out) {
  const CertificateFile cf = certificate_from_json(read_file(file));
  const Certificate& cert = cf.certificate;
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("identity sum Q_i B_i + remainder = target", verify_certificate(cert));
  checks.emplace_back("remainder is zero", cert.remainder.is_zero());
  checks.emplace_back("side matches the spec", cf.side == cf.spec.side());
  bool target_ok = false;
  try {
    target_ok = build_target(cf.spec.normalized()) == cert.target;
  } catch (const UsageError&) {
  }
  checks.emplace_back("target matches the spec", target_ok);
  // Every basis element must lie in the ideal of the base relations.
  Prover prover(prover_options(c));
  const auto gb = cf.degree_bound
                      ? prover.truncated_basis(cf.spec.q, cf.spec.side(), *cf.degree_bound)
                      : prover.basis(cf.spec.q, cf.spec.side());
  const bool members = std::all_of(cert.basis.begin(), cert.basis.end(),
                                   [&](const DiffPoly& g) { return gb->contains(g); });
  checks.emplace_back("basis lies in the ideal of the base relations", members);
  checks.emplace_back("recorded verdict matches", cf.proved == cert.remainder.is_zero());

  const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& p) { return p.second; });
  if (c.output == Output::kJson) {
    json items = json::array();
    for (const auto& [name, pass] : checks) items.push_back({{"check", name}, {"passed", pass}});
    out << json{{"file", file},
                {"spec", json::parse(spec_to_json(cf.spec))},
                {"passed", ok},
                {"checks", items}}
               .dump(2)
        << '\n';
  } else {
    out << "certificate " << file << ": " << cf.spec.to_string() << '\n';
    for (const auto& [name, pass] : checks) out << (pass ? "PASS " : "FAIL ") << name << '\n';
  }
  return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// basis

int cmd_basis(const Common& c, std::uint32_t q, const std::string& side_text, bool recompute,
              std::ostream& out) {
  require_supported_prime(q);
  const Side side = parse_side(side_text);
  Prover prover(prover_options(c, recompute));
  BasisSource source{};
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (c.timeout_ms > 0) {
    deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(c.timeout_ms);
  }
  const auto gb = prover.basis(q, side, &source, deadline);
  if (c.output == Output::kJson) {
    json polys = json::array();
    for (const auto& g : *gb) polys.push_back(g.to_string());
    out << json{{"q", q},
                {"side", std::string(to_string(side))},
                {"order", std::string(kBasisFormatTag)},
                {"source", std::string(to_string(source))},
                {"size", gb->size()},
                {"basis", polys}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& g : *gb) out << g.to_string() << '\n';
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proves and searches for congruences of partition and divisor convolutions",
               "diffcong"};
  app.require_subcommand(1);

  // prove
  CLI::App* prove = app.add_subcommand("prove", "Prove a congruence by ideal membership");
  prove->require_subcommand(1);
  std::map<Family, ProveArgs> prove_args;
  std::map<Family, CLI::App*> prove_cmds;
  for (Family family : {Family::kRamanujan, Family::kLinComb, Family::kWeighted2}) {
    ProveArgs& pa = prove_args[family];
    CLI::App* sub = prove->add_subcommand(std::string(to_string(family)));
    add_common(sub, pa.common);
    add_q(sub, pa.flags);
    add_series(sub, pa.flags, family == Family::kLinComb ? "divisor" : "partition");
    switch (family) {
      case Family::kRamanujan:
        sub->add_option("--k", pa.flags.k, "Convolution power")->required();
        sub->add_option("--r", pa.flags.r, "Residue")->required();
        break;
      case Family::kLinComb:
        sub->add_option("--r", pa.flags.r, "Residue")->required();
        sub->add_option("--coeffs", pa.flags.coeffs, "c_1,...,c_{q-1}")->required();
        break;
      case Family::kWeighted2:
        sub->add_option("--w", pa.flags.weight, "Weight, e.g. \"a^2+3ab+a\"")->required();
        break;
    }
    sub->add_option("--cert", pa.cert, "Certificate path (default: derived from the spec)");
    sub->add_flag("--no-cert", pa.no_cert, "Do not write a certificate");
    sub->add_flag("--truncate", pa.common.truncate,
                  "Reduce by a basis truncated at the target degree (partition only)");
    prove_cmds[family] = sub;
  }

  // search
  CLI::App* search = app.add_subcommand("search", "Find candidate congruences numerically");
  search->require_subcommand(1);
  std::map<Family, SearchArgs> search_args;
  std::map<Family, CLI::App*> search_cmds;
  for (Family family : {Family::kRamanujan, Family::kLinComb, Family::kWeighted2}) {
    SearchArgs& sa = search_args[family];
    CLI::App* sub = search->add_subcommand(std::string(to_string(family)));
    add_common(sub, sa.common);
    add_q(sub, sa.flags);
    add_series(sub, sa.flags, family == Family::kLinComb ? "divisor" : "partition");
    sub->add_flag("--prove", sa.prove, "Run the prover on every hit");
    sub->add_flag("--truncate", sa.common.truncate,
                  "Prove with bases truncated at the target degree (partition only)");
    sub->add_option("--jobs", sa.common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (family == Family::kLinComb) {
      sub->add_option("--r", sa.flags.r, "Residue (default: all)");
    }
    if (family == Family::kWeighted2) {
      sub->add_option("--max-terms", sa.max_terms, "Largest number of monomials (default q-2)");
    }
    search_cmds[family] = sub;
  }

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Numerical checks and certificate checking");
  verify->require_subcommand(1);
  Common v5_common;
  SpecFlags v5_flags;
  CLI::App* v5 = verify->add_subcommand("section5", "Divisor-function identities and congruences");
  add_common(v5, v5_common, false);
  add_q(v5, v5_flags, false);

  Common vc_common;
  SpecFlags vc_flags;
  CLI::App* vc = verify->add_subcommand("congruence", "Check a congruence on the oracle series");
  add_common(vc, vc_common, false);
  add_q(vc, vc_flags);
  add_series(vc, vc_flags, "partition");
  vc->add_option("--k", vc_flags.k, "Convolution power");
  vc->add_option("--r", vc_flags.r, "Residue");
  vc->add_option("--coeffs", vc_flags.coeffs, "c_1,...,c_{q-1}");
  vc->add_option("--w", vc_flags.weight, "Weight");

  Common vf_common;
  std::string vf_file;
  CLI::App* vf = verify->add_subcommand("certificate", "Re-check a certificate file");
  add_common(vf, vf_common);
  vf->add_option("--file", vf_file, "Certificate JSON")->required();

  // basis
  Common b_common;
  std::uint32_t b_q = 0;
  std::string b_side;
  bool b_recompute = false;
  CLI::App* basis = app.add_subcommand("basis", "Print the Groebner basis for (q, side)");
  add_common(basis, b_common);
  basis->add_option("--q", b_q, "Prime modulus q > 3")->required();
  basis->add_option("--side", b_side, "E or S")->required()->check(CLI::IsMember({"E", "S"}));
  basis->add_flag("--recompute", b_recompute, "Ignore the cache and recompute");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (auto& [family, sub] : prove_cmds) {
      if (sub->parsed()) return cmd_prove(family, prove_args[family], out);
    }
    for (auto& [family, sub] : search_cmds) {
      if (sub->parsed()) {
        SearchArgs& sa = search_args[family];
        if (auto* r = sub->get_option_no_throw("--r")) sa.has_r = r->count() > 0;
        return cmd_search(family, sa, out);
      }
    }
    if (v5->parsed()) return cmd_verify_section5(v5_common, v5_flags, v5->count("--q") > 0, out);
    if (vc->parsed()) {
      return cmd_verify_congruence(vc_common, vc_flags, vc->count("--k") > 0, vc->count("--r") > 0,
                                   out);
    }
    if (vf->parsed()) return cmd_verify_certificate(vf_common, vf_file, out);
    if (basis->parsed()) return cmd_basis(b_common, b_q, b_side, b_recompute, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BuchbergerTimeout& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  err << app.help();
  return kUsage;
}

}  // namespace diffcong::cli
