#ifndef OPERAD_RUN_CACHE_HPP
#define OPERAD_RUN_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "json.hpp"

#include "operad/error.hpp"

namespace operad {

// One rank computation: operad (preset name or file hash), degree and prime
// form the key.
struct RunRecord {
  std::string operad;
  int degree = 0;
  std::uint64_t prime = 0;
  std::uint64_t monomial_count = 0;
  std::uint64_t row_count = 0;
  std::uint64_t rank = 0;
  std::uint64_t dim = 0;
  double wall_time_ms = 0;
  std::string timestamp;
};

void to_json(nlohmann::ordered_json& j, const RunRecord& r);
void from_json(const nlohmann::ordered_json& j, RunRecord& r);

// A recomputed rank disagrees with the cached one.
class CacheConflict : public Error {
 public:
  using Error::Error;
};

// Append-only JSON-lines store of RunRecords. Appends are serialized through
// one mutex, so concurrent workers may record results.
class RunCache {
 public:
  static constexpr const char* kDefaultPath = ".operad-cache.jsonl";
  static constexpr const char* kEnvironmentVariable = "OPERAD_CACHE";

  explicit RunCache(std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }
  std::optional<RunRecord> find(const std::string& operad, int degree, std::uint64_t prime) const;
  // Appends a record. A record already present with the same rank is left
  // alone; a different rank throws CacheConflict naming both values.
  void record(const RunRecord& r);
  std::size_t size() const;

 private:
  using Key = std::tuple<std::string, int, std::uint64_t>;

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<Key, RunRecord> records_;
};

// Flag value if given, else $OPERAD_CACHE, else the default file name.
std::filesystem::path resolve_cache_path(const std::optional<std::string>& flag);

std::string utc_timestamp();

}  // namespace operad

#endif  // OPERAD_RUN_CACHE_HPP
