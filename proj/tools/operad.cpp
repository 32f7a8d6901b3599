#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "operad/commands.hpp"

namespace {

struct SourceFlags {
  std::string preset;
  std::string identities;
};

void add_source_flags(CLI::App* cmd, SourceFlags& flags) {
  auto* p = cmd->add_option("--preset", flags.preset, "Built-in operad (see `presets`)");
  auto* f = cmd->add_option("--identities", flags.identities, "File of identities, one per line");
  p->excludes(f);
}

operad::OperadSource load_source(const SourceFlags& flags) {
  if (!flags.preset.empty()) return operad::source_from_preset(flags.preset);
  if (!flags.identities.empty()) return operad::source_from_file(flags.identities);
  throw operad::Error("one of --preset or --identities is required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions, duals and Ginzburg-Kapranov defects of binary operads"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> cache_flag;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool json = false;
  bool verify_cache = false;
  bool huge = false;
  double dense_threshold = operad::RankOptions{}.dense_threshold;
  app.add_option("--cache", cache_flag, "Run cache (default $OPERAD_CACHE or .operad-cache.jsonl)");
  app.add_option("--jobs", jobs, "Worker threads for per-prime ranks")->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "Machine-readable output");
  app.add_flag("--verify-cache", verify_cache, "Recompute cached ranks and fail on mismatch");
  app.add_flag("--i-know-this-is-huge", huge, "Allow degrees above 6");
  app.add_option("--dense-threshold", dense_threshold, "Density at which elimination goes dense")
      ->check(CLI::Range(0.0, 1.0));

  SourceFlags source_flags;
  int degree = 0;
  std::string prime = "auto";
  std::optional<std::string> dump_matrix;
  std::string bound_on = "dim";

  auto* dim = app.add_subcommand("dim", "dim P(n) modulo one prime (uncertified)");
  add_source_flags(dim, source_flags);
  dim->add_option("--degree", degree, "Arity n")->required();
  dim->add_option("--prime", prime, "auto (2^63 - 25) or a prime below 2^63");
  dim->add_option("--dump-matrix", dump_matrix, "Write the consequence matrix as triples");

  auto* certify = app.add_subcommand("certify", "dim P(n) in characteristic 0 via several primes");
  add_source_flags(certify, source_flags);
  certify->add_option("--degree", degree, "Arity n")->required();
  certify->add_option("--dump-matrix", dump_matrix, "Write the consequence matrix as triples");
  certify->add_option("--bound-on", bound_on, "Quantity r in the prime bound (prod p)^2 > r^r")
      ->check(CLI::IsMember({"dim", "rank"}));

  int max_degree = 0;
  bool gk_certified = false;
  auto* gk = app.add_subcommand("gk", "Ginzburg-Kapranov defect g_P(g_P!(x)) - x");
  add_source_flags(gk, source_flags);
  gk->add_option("--max-degree", max_degree, "Truncation degree")->required();
  gk->add_flag("--certify", gk_certified, "Certify every dimension of P");
  gk->add_option("--bound-on", bound_on, "Quantity r in the prime bound")->check(CLI::IsMember({"dim", "rank"}));

  auto* dual = app.add_subcommand("dual", "Quadratic dual of a cubic operad");
  add_source_flags(dual, source_flags);

  std::string identity_text;
  auto* lin = app.add_subcommand("linearize", "Full linearization of one identity");
  lin->add_option("identity", identity_text, "Identity, e.g. \"(x*y)*y = x*(y*y)\"")->required();

  app.add_subcommand("presets", "List built-in operads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? operad::kExitOk : operad::kExitUsage;
  }

  operad::CommandContext ctx(std::cout, std::cerr);
  ctx.jobs = jobs;
  ctx.json = json;
  ctx.verify_cache = verify_cache;
  ctx.allow_huge = huge;
  ctx.rank.dense_threshold = dense_threshold;
  ctx.bound_on = bound_on == "rank" ? operad::BoundParameter::kRank : operad::BoundParameter::kDimension;
  if (dump_matrix) ctx.dump_matrix = *dump_matrix;

  try {
    if (lin->parsed()) return operad::cmd_linearize(identity_text, ctx);
    if (app.got_subcommand("presets")) return operad::cmd_presets(ctx);
    const operad::OperadSource source = load_source(source_flags);
    if (dual->parsed()) return operad::cmd_dual(source, ctx);

    operad::RunCache cache(operad::resolve_cache_path(cache_flag));
    ctx.cache = &cache;
    if (dim->parsed()) return operad::cmd_dim(source, degree, prime, ctx);
    if (certify->parsed()) return operad::cmd_certify(source, degree, ctx);
    if (gk->parsed()) return operad::cmd_gk(source, max_degree, gk_certified, ctx);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return operad::kExitUsage;
  }
  return operad::kExitUsage;
}
