#include "operad/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "operad/consequences.hpp"
#include "operad/dual.hpp"
#include "operad/prime_field.hpp"
#include "operad/primes.hpp"
#include "operad/rank.hpp"
#include "operad/series.hpp"

namespace operad {

namespace {

constexpr int kHugeDegree = 6;

void check_degree(int degree, const CommandContext& ctx) {
  if (degree < 1) throw Error("degree must be positive");
  if (degree > kHugeDegree && !ctx.allow_huge) {
    throw Error("degree " + std::to_string(degree) + " has " + std::to_string(dim_free(degree)) +
                " monomials; pass --i-know-this-is-huge to proceed");
  }
}

std::uint64_t parse_prime(const std::string& spec) {
  if (spec == "auto") return kLargestPrimeU63;
  std::uint64_t p = 0;
  std::size_t used = 0;
  try {
    p = std::stoull(spec, &used);
  } catch (const std::exception&) {
    throw Error("invalid prime '" + spec + "'");
  }
  if (used != spec.size()) throw Error("invalid prime '" + spec + "'");
  if (!is_prime_u63(p)) throw Error(spec + " is not a prime below 2^63");
  return p;
}

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(12) << key << value << '\n';
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : ", ") + std::to_string(v);
  return out;
}

}  // namespace

OperadSource source_from_preset(const std::string& name) {
  OperadPreset p = preset(name);
  return {p.name, std::move(p.identities), true};
}

OperadSource source_from_file(const std::filesystem::path& path) {
  auto ids = load_identity_file(path);
  if (ids.empty()) throw Error(path.string() + ": no identities");
  std::string key = hash_identities(ids);
  return {std::move(key), std::move(ids), false};
}

OperadSource source_from_identities(std::string key, std::vector<Identity> ids) {
  return {std::move(key), std::move(ids), false};
}

std::string hash_identities(const std::vector<Identity>& ids) {
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
  for (const auto& id : ids) {
    for (unsigned char c : to_string(id) + "\n") {
      h ^= c;
      h *= 1099511628211ULL;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "file:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DimensionEngine::DimensionEngine(const OperadSource& source, int degree, CommandContext& ctx)
    : source_(source), degree_(degree), ctx_(ctx) {
  check_degree(degree, ctx);
}

const SparseRowMatrix& DimensionEngine::matrix() {
  std::call_once(generated_, [&] {
    // Identities above the degree contribute nothing to P(n).
    std::vector<Identity> ids;
    for (const auto& id : source_.identities) {
      if (id.degree() <= degree_) ids.push_back(id);
    }
    matrix_ = std::make_unique<SparseRowMatrix>(expand_consequences(ids, degree_));
    if (ctx_.dump_matrix) {
      std::ofstream out(*ctx_.dump_matrix);
      if (!out) throw Error("cannot write " + ctx_.dump_matrix->string());
      matrix_->write_triples(out);
    }
  });
  return *matrix_;
}

std::uint64_t DimensionEngine::row_count() { return rank(kLargestPrimeU63).row_count; }

RunRecord DimensionEngine::rank(std::uint64_t prime) {
  std::optional<RunRecord> cached;
  if (ctx_.cache) {
    cached = ctx_.cache->find(source_.key, degree_, prime);
    if (cached && !ctx_.verify_cache) return *cached;
  }
  const SparseRowMatrix& m = matrix();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t r = rank_mod_p(m, PrimeField(prime), ctx_.rank);
  ++ctx_.rank_computations;
  RunRecord rec;
  rec.operad = source_.key;
  rec.degree = degree_;
  rec.prime = prime;
  rec.monomial_count = m.columns();
  rec.row_count = m.rows();
  rec.rank = r;
  rec.dim = m.columns() - r;
  rec.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.timestamp = utc_timestamp();
  if (cached) {
    if (cached->rank != rec.rank) {
      throw CacheConflict("rank mismatch for " + rec.operad + " degree " + std::to_string(degree_) + " prime " +
                          std::to_string(prime) + ": cached " + std::to_string(cached->rank) + ", computed " +
                          std::to_string(rec.rank));
    }
    return *cached;
  }
  if (ctx_.cache) ctx_.cache->record(rec);
  return rec;
}

int cmd_dim(const OperadSource& source, int degree, const std::string& prime_spec, CommandContext& ctx) {
  const std::uint64_t p = parse_prime(prime_spec);
  if (p == 2 && source.is_preset) {
    ctx.err << "warning: in characteristic 2 these operads are not quadratic; the result is not meaningful\n";
  }
  DimensionEngine engine(source, degree, ctx);
  const RunRecord rec = engine.rank(p);
  if (ctx.json) {
    nlohmann::ordered_json j = rec;
    j["status"] = "uncertified";
    ctx.out << j.dump() << '\n';
  } else {
    print_row(ctx.out, "operad", rec.operad);
    print_row(ctx.out, "degree", std::to_string(rec.degree));
    print_row(ctx.out, "prime", std::to_string(rec.prime));
    print_row(ctx.out, "monomials", std::to_string(rec.monomial_count));
    print_row(ctx.out, "rows", std::to_string(rec.row_count));
    print_row(ctx.out, "rank", std::to_string(rec.rank));
    print_row(ctx.out, "dim", std::to_string(rec.dim) + "  (uncertified: upper bound for characteristic 0)");
  }
  return kExitOk;
}

nlohmann::ordered_json certificate_json(const RankCertificate& cert, const std::string& operad) {
  return nlohmann::ordered_json{{"operad", operad},
                                {"degree", cert.degree},
                                {"rows", cert.rows},
                                {"columns", cert.columns},
                                {"r", cert.r},
                                {"dim", cert.dim()},
                                {"primes", cert.primes},
                                {"ranks", cert.ranks},
                                {"bound_on", to_string(cert.bound_on)},
                                {"bound_value", cert.bound_value},
                                {"bound_ok", cert.bound_ok},
                                {"verdict", to_string(cert.verdict)},
                                {"characteristic", 0},
                                {"timings_ms", cert.timings_ms}};
}

int cmd_certify(const OperadSource& source, int degree, CommandContext& ctx) {
  DimensionEngine engine(source, degree, ctx);
  CertifyOptions options;
  options.bound_on = ctx.bound_on;
  options.jobs = ctx.jobs;
  options.rank = ctx.rank;
  auto provider = [&](std::uint64_t p) {
    const RunRecord rec = engine.rank(p);
    return PrimeRank{p, rec.rank, rec.wall_time_ms};
  };
  RankCertificate cert = certify_rank(degree, 0, dim_free(degree), provider, options);
  cert.rows = engine.row_count();

  if (ctx.json) {
    ctx.out << certificate_json(cert, source.key).dump() << '\n';
  } else {
    print_row(ctx.out, "operad", source.key);
    print_row(ctx.out, "degree", std::to_string(cert.degree));
    print_row(ctx.out, "monomials", std::to_string(cert.columns));
    print_row(ctx.out, "rows", std::to_string(cert.rows));
    print_row(ctx.out, "rank", std::to_string(cert.r));
    print_row(ctx.out, "dim", std::to_string(cert.dim()));
    print_row(ctx.out, "bound", "(p1...pk)^2 > b^b with b = " + to_string(cert.bound_on) + " = " +
                                    std::to_string(cert.bound_value) + ": " + (cert.bound_ok ? "holds" : "fails"));
    print_row(ctx.out, "primes", std::to_string(cert.primes.size()));
    for (std::size_t i = 0; i < cert.primes.size(); ++i) {
      std::ostringstream line;
      line << cert.primes[i] << "  rank " << cert.ranks[i] << "  " << std::fixed << std::setprecision(1)
           << cert.timings_ms[i] << " ms";
      print_row(ctx.out, "", line.str());
    }
    print_row(ctx.out, "verdict", to_string(cert.verdict) + " (characteristic 0)");
  }
  return cert.verdict == Verdict::kCertified ? kExitOk : kExitInconclusive;
}

int cmd_gk(const OperadSource& source, int max_degree, bool certified, CommandContext& ctx) {
  check_degree(max_degree, ctx);
  for (const auto& id : source.identities) {
    if (id.degree() != 3 || !id.is_multilinear()) {
      throw Error("gk needs a quadratic operad (multilinear degree-3 identities); got " + to_string(id));
    }
  }
  const DualPresentation dual = dual_relations(source.identities);
  const OperadSource dual_source = source_from_identities("dual:" + source.key, dual.identities());

  std::vector<std::uint64_t> dims, dual_dims;
  for (int n = 1; n <= max_degree; ++n) {
    DimensionEngine engine(source, n, ctx);
    if (certified) {
      CertifyOptions options;
      options.bound_on = ctx.bound_on;
      options.jobs = ctx.jobs;
      options.rank = ctx.rank;
      auto provider = [&](std::uint64_t p) {
        const RunRecord rec = engine.rank(p);
        return PrimeRank{p, rec.rank, rec.wall_time_ms};
      };
      const RankCertificate cert = certify_rank(n, 0, dim_free(n), provider, options);
      if (cert.verdict != Verdict::kCertified) {
        ctx.err << "degree " << n << ": certification " << to_string(cert.verdict) << '\n';
        return kExitInconclusive;
      }
      dims.push_back(cert.dim());
    } else {
      dims.push_back(engine.rank(kLargestPrimeU63).dim);
    }
  }
  for (int n = 1; n <= max_degree; ++n) {
    // A binary operad that vanishes in some arity vanishes in all higher ones.
    if (!dual_dims.empty() && dual_dims.back() == 0) {
      dual_dims.push_back(0);
      continue;
    }
    DimensionEngine engine(dual_source, n, ctx);
    dual_dims.push_back(engine.rank(kLargestPrimeU63).dim);
  }

  const auto g_p = poincare(dims, max_degree);
  const auto g_dual = poincare(dual_dims, max_degree);
  const GkDefect defect = gk_defect(g_p, g_dual, max_degree);

  if (ctx.json) {
    nlohmann::ordered_json j{{"operad", source.key},
                             {"max_degree", max_degree},
                             {"certified", certified},
                             {"dims", dims},
                             {"dual", dual.to_string()},
                             {"dual_dims", dual_dims},
                             {"series", to_string(g_p)},
                             {"dual_series", to_string(g_dual)},
                             {"defect", to_string(defect.defect)}};
    if (defect.first_degree) {
      j["first_defect_degree"] = *defect.first_degree;
      j["first_defect_value"] = to_string(defect.first_value);
    } else {
      j["first_defect_degree"] = nullptr;
      j["first_defect_value"] = nullptr;
    }
    ctx.out << j.dump() << '\n';
  } else {
    print_row(ctx.out, "operad", source.key);
    print_row(ctx.out, "dims", join(dims) + (certified ? "  (certified)" : "  (probe prime)"));
    print_row(ctx.out, "dual", dual.to_string());
    print_row(ctx.out, "dual dims", join(dual_dims));
    print_row(ctx.out, "g_P", to_string(g_p) + " + O(x^" + std::to_string(max_degree + 1) + ")");
    print_row(ctx.out, "g_P!", to_string(g_dual) + " + O(x^" + std::to_string(max_degree + 1) + ")");
    print_row(ctx.out, "defect", to_string(defect.defect) + " + O(x^" + std::to_string(max_degree + 1) + ")");
    if (defect.first_degree) {
      print_row(ctx.out, "result", "not Koszul: coefficient of x^" + std::to_string(*defect.first_degree) + " is " +
                                       to_string(defect.first_value));
    } else {
      print_row(ctx.out, "result", "no defect through degree " + std::to_string(max_degree));
    }
  }
  return defect.first_degree ? kExitDefect : kExitOk;
}

int cmd_dual(const OperadSource& source, CommandContext& ctx) {
  const DualPresentation dual = dual_relations(source.identities);
  if (ctx.json) {
    std::vector<std::string> extra;
    for (const auto& id : dual.extra) extra.push_back(to_string(id));
    nlohmann::ordered_json j{
        {"operad", source.key}, {"associative", dual.associative}, {"identities", extra}, {"text", dual.to_string()}};
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << dual.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_linearize(const std::string& identity_text, CommandContext& ctx) {
  const Identity in = parse_identity(identity_text);
  const Identity out = linearize(in);
  if (ctx.json) {
    ctx.out << nlohmann::ordered_json{{"input", to_string(in)}, {"output", to_string(out)}}.dump() << '\n';
  } else {
    ctx.out << to_string(out) << '\n';
  }
  return kExitOk;
}

int cmd_presets(CommandContext& ctx) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& name : preset_names()) {
    const auto p = preset(name);
    std::vector<std::string> lines;
    for (const auto& id : p.identities) lines.push_back(to_string(id));
    if (ctx.json) {
      j[name] = lines;
    } else {
      ctx.out << name << '\n';
      for (const auto& l : lines) ctx.out << "    " << l << '\n';
    }
  }
  if (ctx.json) ctx.out << j.dump() << '\n';
  return kExitOk;
}

}  // namespace operad
