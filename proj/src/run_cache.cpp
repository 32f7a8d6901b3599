#include "operad/run_cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

namespace operad {

void to_json(nlohmann::ordered_json& j, const RunRecord& r) {
  j = nlohmann::ordered_json{{"operad", r.operad},
                             {"degree", r.degree},
                             {"prime", r.prime},
                             {"monomial_count", r.monomial_count},
                             {"row_count", r.row_count},
                             {"rank", r.rank},
                             {"dim", r.dim},
                             {"wall_time_ms", r.wall_time_ms},
                             {"timestamp", r.timestamp}};
}

void from_json(const nlohmann::ordered_json& j, RunRecord& r) {
  j.at("operad").get_to(r.operad);
  j.at("degree").get_to(r.degree);
  j.at("prime").get_to(r.prime);
  j.at("monomial_count").get_to(r.monomial_count);
  j.at("row_count").get_to(r.row_count);
  j.at("rank").get_to(r.rank);
  j.at("dim").get_to(r.dim);
  j.at("wall_time_ms").get_to(r.wall_time_ms);
  j.at("timestamp").get_to(r.timestamp);
}

RunCache::RunCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  int line_no = 0;
  std::streamoff line_start = 0;
  std::optional<std::streamoff> torn;
  for (;;) {
    line_start = in.tellg();
    if (!std::getline(in, line)) break;
    ++line_no;
    if (line.empty()) continue;
    RunRecord r;
    try {
      r = nlohmann::ordered_json::parse(line).get<RunRecord>();
    } catch (const std::exception& e) {
      // A run killed mid-write leaves at most a torn last line.
      if (in.peek() == std::char_traits<char>::eof()) {
        torn = line_start;
        break;
      }
      throw Error(path_.string() + ":" + std::to_string(line_no) + ": corrupt cache record: " + e.what());
    }
    Key key{r.operad, r.degree, r.prime};
    auto [it, inserted] = records_.emplace(key, r);
    if (!inserted && it->second.rank != r.rank) {
      throw CacheConflict(path_.string() + ": conflicting ranks " + std::to_string(it->second.rank) + " and " +
                          std::to_string(r.rank) + " for " + r.operad + " degree " + std::to_string(r.degree) +
                          " prime " + std::to_string(r.prime));
    }
  }
  in.close();
  if (torn) std::filesystem::resize_file(path_, static_cast<std::uintmax_t>(*torn));
}

std::optional<RunRecord> RunCache::find(const std::string& operad, int degree, std::uint64_t prime) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find(Key{operad, degree, prime});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void RunCache::record(const RunRecord& r) {
  std::lock_guard lock(mutex_);
  Key key{r.operad, r.degree, r.prime};
  if (auto it = records_.find(key); it != records_.end()) {
    if (it->second.rank != r.rank) {
      throw CacheConflict("rank mismatch for " + r.operad + " degree " + std::to_string(r.degree) + " prime " +
                          std::to_string(r.prime) + ": cached " + std::to_string(it->second.rank) + ", computed " +
                          std::to_string(r.rank));
    }
    return;
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot append to cache " + path_.string());
  nlohmann::ordered_json j = r;
  out << j.dump() << '\n';
  out.flush();
  records_.emplace(key, r);
}

std::size_t RunCache::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

std::filesystem::path resolve_cache_path(const std::optional<std::string>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(RunCache::kEnvironmentVariable); env && *env) return env;
  return RunCache::kDefaultPath;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace operad
