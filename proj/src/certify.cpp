#include "operad/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "operad/error.hpp"
#include "operad/prime_field.hpp"

namespace operad {

namespace mp = boost::multiprecision;

namespace {

// The first k primes below 2^63 in descending order, extended on demand.
std::vector<std::uint64_t> largest_primes(std::size_t k) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> cache;
  std::lock_guard lock(mutex);
  std::uint64_t candidate = cache.empty() ? kPrimeLimit - 1 : cache.back() - 2;
  while (cache.size() < k) {
    if (is_prime_u63(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(k)};
}

mp::cpp_int power_of_self(std::size_t r) { return mp::pow(mp::cpp_int(r), static_cast<unsigned>(r)); }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertified:
      return "certified";
    case Verdict::kLowerBoundOnly:
      return "lower_bound_only";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(BoundParameter b) { return b == BoundParameter::kRank ? "rank" : "dim"; }

std::size_t estimate_prime_count(std::size_t r) {
  if (r == 0) return 0;
  const double needed = static_cast<double>(r) * std::log2(static_cast<double>(r));  // log2 of r^r
  double have = 0;
  std::size_t k = 0;
  for (std::size_t chunk = 16;; chunk *= 2) {
    const auto primes = largest_primes(chunk);
    for (; k < primes.size(); ++k) {
      if (2 * have > needed) return k;
      have += std::log2(static_cast<double>(primes[k]));
    }
  }
}

bool hadamard_bound_holds(std::span<const std::uint64_t> primes, std::size_t r) {
  if (r == 0) return true;
  mp::cpp_int product = 1;
  for (auto p : primes) product *= p;
  return product * product > power_of_self(r);
}

std::vector<std::uint64_t> select_primes(std::size_t r) {
  if (r == 0) return {};
  const mp::cpp_int target = power_of_self(r);
  const std::size_t guess = estimate_prime_count(r);
  const auto primes = largest_primes(guess + 8);

  // Exact check from a little below the estimate; if even that start already
  // passes, scan from the first prime.
  std::size_t start = guess > 4 ? guess - 4 : 1;
  mp::cpp_int product = 1;
  for (std::size_t k = 0; k + 1 < start; ++k) product *= primes[k];
  if (start > 1) {
    mp::cpp_int trial = product * primes[start - 1];
    if (trial * trial > target) {
      start = 1;
      product = 1;
    }
  }
  for (std::size_t k = start;; ++k) {
    const auto more = largest_primes(k);
    product *= more[k - 1];
    if (product * product > target) return more;
  }
}

RankCertificate certify_rank(int degree, std::size_t rows, std::size_t columns, const RankProvider& rank_of,
                             const CertifyOptions& options) {
  RankCertificate cert;
  cert.degree = degree;
  cert.rows = rows;
  cert.columns = columns;
  cert.bound_on = options.bound_on;

  std::map<std::uint64_t, PrimeRank> results;
  auto run = [&](const std::vector<std::uint64_t>& primes) {
    std::vector<std::uint64_t> missing;
    for (auto p : primes) {
      if (!results.count(p)) missing.push_back(p);
    }
    std::vector<PrimeRank> out(missing.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
      for (std::size_t i = next++; i < missing.size(); i = next++) {
        try {
          out[i] = rank_of(missing[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(missing.size())));
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < missing.size(); ++i) results[missing[i]] = out[i];
  };
  auto bound_value = [&](std::size_t r) { return options.bound_on == BoundParameter::kRank ? r : columns - r; };
  // A nonzero rank is always witnessed by at least the probe prime.
  auto primes_for = [&](std::size_t r) {
    auto primes = select_primes(bound_value(r));
    if (primes.empty() && r > 0) primes.push_back(kLargestPrimeU63);
    return primes;
  };
  auto max_rank = [&](const std::vector<std::uint64_t>& primes, std::size_t floor) {
    for (auto p : primes) floor = std::max(floor, results.at(p).rank);
    return floor;
  };
  auto consistent = [&](const std::vector<std::uint64_t>& primes, std::size_t r) {
    return std::all_of(primes.begin(), primes.end(), [&](auto p) { return results.at(p).rank == r; });
  };

  run({kLargestPrimeU63});
  std::size_t r = results.at(kLargestPrimeU63).rank;
  auto primes = primes_for(r);
  run(primes);
  bool agree = consistent(primes, r);
  if (!agree) {
    r = max_rank(primes, r);
    primes = primes_for(r);
    run(primes);
    agree = consistent(primes, r);
    if (!agree) r = max_rank(primes, r);
  }

  cert.r = r;
  cert.bound_value = bound_value(r);
  cert.primes = primes;
  for (auto p : primes) {
    cert.ranks.push_back(results.at(p).rank);
    cert.timings_ms.push_back(results.at(p).wall_ms);
  }
  cert.bound_ok = hadamard_bound_holds(cert.primes, cert.bound_value);
  if (agree && cert.bound_ok) {
    cert.verdict = Verdict::kCertified;
  } else if (cert.bound_ok) {
    cert.verdict = Verdict::kLowerBoundOnly;
  } else {
    cert.verdict = Verdict::kInconclusive;
  }
  return cert;
}

RankCertificate certify_rank(const SparseRowMatrix& m, const CertifyOptions& options) {
  if (!m.has_unit_entries()) {
    throw Error(
        "certify: matrix has entries outside {-1, 0, 1}; the r^(r/2) Hadamard bound only covers unit entries");
  }
  auto provider = [&](std::uint64_t p) {
    const auto start = std::chrono::steady_clock::now();
    PrimeRank pr;
    pr.prime = p;
    pr.rank = rank_mod_p(m, PrimeField(p), options.rank);
    pr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return pr;
  };
  return certify_rank(m.degree(), m.rows(), m.columns(), provider, options);
}

}  // namespace operad
