#ifndef OPERAD_CERTIFY_HPP
#define OPERAD_CERTIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "operad/primes.hpp"
#include "operad/rank.hpp"
#include "operad/sparse_matrix.hpp"

namespace operad {

// The r in the (prod p)^2 > r^r test. kDimension (the default) takes r to be
// the operad dimension, columns minus rank. kRank applies the Hadamard bound
// to the rank itself, the size of the nonsingular minor, and needs more primes.
enum class BoundParameter { kDimension, kRank };

enum class Verdict { kCertified, kLowerBoundOnly, kInconclusive };

std::string to_string(Verdict v);
std::string to_string(BoundParameter b);

// Descending run of the largest primes below 2^63, as many as it takes for
// their product p_1 ... p_k to satisfy (p_1 ... p_k)^2 > r^r. The comparison is
// exact. r = 0 needs no primes.
std::vector<std::uint64_t> select_primes(std::size_t r);

// Exact test (prod primes)^2 > r^r, with r = 0 treated as satisfied.
bool hadamard_bound_holds(std::span<const std::uint64_t> primes, std::size_t r);

// Number of primes predicted by a floating-point log estimate; used only to
// cross-check select_primes.
std::size_t estimate_prime_count(std::size_t r);

struct PrimeRank {
  std::uint64_t prime = 0;
  std::size_t rank = 0;
  double wall_ms = 0;
};

struct RankCertificate {
  int degree = 0;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t r = 0;  // claimed characteristic-zero rank
  BoundParameter bound_on = BoundParameter::kDimension;
  std::size_t bound_value = 0;  // the r used in the prime bound
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> ranks;
  std::vector<double> timings_ms;
  bool bound_ok = false;
  Verdict verdict = Verdict::kInconclusive;

  std::size_t dim() const { return columns - r; }
};

struct CertifyOptions {
  BoundParameter bound_on = BoundParameter::kDimension;
  unsigned jobs = 1;
  RankOptions rank;
};

// Computes a rank for one prime. Callers substitute cached results here.
using RankProvider = std::function<PrimeRank(std::uint64_t prime)>;

// Runs the probe prime (2^63 - 25), selects primes for the candidate rank and
// checks that every selected prime reproduces it. On disagreement the maximum
// observed rank becomes the new candidate and the round is repeated once.
RankCertificate certify_rank(int degree, std::size_t rows, std::size_t columns, const RankProvider& rank_of,
                             const CertifyOptions& options = {});

// Convenience overload computing every rank directly. Entries must be -1, 0 or 1.
RankCertificate certify_rank(const SparseRowMatrix& m, const CertifyOptions& options = {});

}  // namespace operad

#endif  // OPERAD_CERTIFY_HPP
