#ifndef OPERAD_COMMANDS_HPP
#define OPERAD_COMMANDS_HPP

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "operad/certify.hpp"
#include "operad/identity.hpp"
#include "operad/run_cache.hpp"
#include "operad/sparse_matrix.hpp"

namespace operad {

// Process exit codes shared by all commands.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDefect = 2,  // gk found a nonzero defect coefficient
  kExitInconclusive = 3,
};

// Identities plus the name under which their runs are cached.
struct OperadSource {
  std::string key;  // preset name, or "file:<hash>"
  std::vector<Identity> identities;
  bool is_preset = false;
};

OperadSource source_from_preset(const std::string& name);
OperadSource source_from_file(const std::filesystem::path& path);
OperadSource source_from_identities(std::string key, std::vector<Identity> ids);

struct CommandContext {
  std::ostream& out;
  std::ostream& err;
  RunCache* cache = nullptr;
  unsigned jobs = 1;
  bool json = false;
  bool verify_cache = false;  // recompute cached ranks and compare
  bool allow_huge = false;    // permit degrees above 6
  std::optional<std::filesystem::path> dump_matrix;
  BoundParameter bound_on = BoundParameter::kDimension;
  RankOptions rank;
  // Number of rank computations actually performed (cache misses).
  std::atomic<std::size_t> rank_computations{0};

  CommandContext(std::ostream& o, std::ostream& e) : out(o), err(e) {}
};

// Rank of M(n) for one operad and degree, through the cache. The matrix is
// generated at most once and only when some prime is missing from the cache.
class DimensionEngine {
 public:
  DimensionEngine(const OperadSource& source, int degree, CommandContext& ctx);

  RunRecord rank(std::uint64_t prime);
  const SparseRowMatrix& matrix();
  std::uint64_t row_count();

 private:
  const OperadSource& source_;
  int degree_;
  CommandContext& ctx_;
  std::once_flag generated_;
  std::unique_ptr<SparseRowMatrix> matrix_;
};

// prime_spec is "auto" (the probe prime 2^63 - 25) or a decimal prime.
int cmd_dim(const OperadSource& source, int degree, const std::string& prime_spec, CommandContext& ctx);
int cmd_certify(const OperadSource& source, int degree, CommandContext& ctx);
int cmd_gk(const OperadSource& source, int max_degree, bool certified, CommandContext& ctx);
int cmd_dual(const OperadSource& source, CommandContext& ctx);
int cmd_linearize(const std::string& identity_text, CommandContext& ctx);
int cmd_presets(CommandContext& ctx);

std::string hash_identities(const std::vector<Identity>& ids);
nlohmann::ordered_json certificate_json(const RankCertificate& cert, const std::string& operad);

}  // namespace operad

#endif  // OPERAD_COMMANDS_HPP
