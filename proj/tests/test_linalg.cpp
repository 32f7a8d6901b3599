#include <limits>
#include <random>
#include <sstream>

#include "dense_rank.hpp"
#include "doctest.h"
#include "operad/prime_field.hpp"
#include "operad/primes.hpp"
#include "operad/rank.hpp"

using namespace operad;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct RandomMatrix {
  std::vector<std::vector<std::int64_t>> dense;
  SparseRowMatrix sparse;
};

// rows x cols with entries in [-range, range]; when rank_cap > 0 the matrix is
// a product A * B with inner dimension rank_cap.
RandomMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range, std::size_t rank_cap,
                           double zero_fraction) {
  std::uniform_int_distribution<int> entry(-range, range);
  std::bernoulli_distribution zero(zero_fraction);
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  if (rank_cap == 0) {
    for (auto& row : a) {
      for (auto& v : row) v = zero(rng) ? 0 : entry(rng);
    }
  } else {
    std::vector<std::vector<std::int64_t>> l(rows, std::vector<std::int64_t>(rank_cap)), r(rank_cap, std::vector<std::int64_t>(cols));
    for (auto& row : l) {
      for (auto& v : row) v = entry(rng);
    }
    for (auto& row : r) {
      for (auto& v : row) v = zero(rng) ? 0 : entry(rng);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t k = 0; k < rank_cap; ++k) a[i][j] += l[i][k] * r[k][j];
      }
    }
  }
  SparseRowMatrix m(0, cols);
  for (const auto& row : a) {
    SparseRow s;
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j] != 0) s.push_back({static_cast<std::uint32_t>(j), row[j]});
    }
    m.add_row(s);
  }
  return {std::move(a), std::move(m)};
}

SparseRowMatrix transpose(const RandomMatrix& rm, std::size_t cols) {
  SparseRowMatrix t(0, rm.dense.size());
  for (std::size_t j = 0; j < cols; ++j) {
    SparseRow s;
    for (std::size_t i = 0; i < rm.dense.size(); ++i) {
      if (rm.dense[i][j] != 0) s.push_back({static_cast<std::uint32_t>(i), rm.dense[i][j]});
    }
    t.add_row(s);
  }
  return t;
}

}  // namespace

TEST_CASE("Miller-Rabin agrees with trial division below 200000") {
  for (std::uint64_t n = 0; n < 200000; ++n) {
    if (is_prime_u63(n) != trial_division_prime(n)) {
      FAIL("mismatch at " << n);
    }
  }
}

TEST_CASE("Miller-Rabin on large values") {
  CHECK(is_prime_u63(kLargestPrimeU63));
  CHECK(kLargestPrimeU63 == (1ULL << 63) - 25);
  for (std::uint64_t k = 1; k < 25; ++k) CHECK_FALSE(is_prime_u63((1ULL << 63) - k));
  CHECK(is_prime_u63((1ULL << 61) - 1));
  CHECK(is_prime_u63((1ULL << 63) - 165));
  CHECK(is_prime_u63((1ULL << 63) - 259));
  // Strong pseudoprimes to small base sets and Carmichael numbers.
  for (std::uint64_t n : {561ULL, 1105ULL, 2047ULL, 3215031751ULL, 2152302898747ULL, 3474749660383ULL,
                          341550071728321ULL, 3825123056546413051ULL}) {
    CHECK_FALSE(is_prime_u63(n));
  }
  CHECK_FALSE(is_prime_u63(4294967291ULL * 4294967279ULL));
  CHECK_FALSE(is_prime_u63(1ULL << 63));
  CHECK_FALSE(is_prime_u63(~0ULL));
}

TEST_CASE("modular arithmetic against 128-bit reference") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : std::vector<std::uint64_t>{2, 3, 65537, (1ULL << 61) - 1, kLargestPrimeU63}) {
    const PrimeField f(p);
    CHECK(f.modulus() == p);
    CHECK(f.reduce(-1) == p - 1);
    CHECK(f.reduce(std::numeric_limits<std::int64_t>::min()) < p);
    CHECK(f.reduce(-static_cast<std::int64_t>(p)) == 0);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t a = rng() % p, b = rng() % p;
      const auto ref = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
      CHECK(f.mul(a, b) == ref);
      CHECK(f.scaler(a)(b) == ref);
      CHECK(f.add(a, b) == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p));
      CHECK(f.add(f.sub(a, b), b) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS(f.inv(0));
  }
  CHECK_THROWS(PrimeField(1));
  CHECK_THROWS(PrimeField(15));
  CHECK_THROWS(PrimeField(1ULL << 63));
}

TEST_CASE("rank agrees with the rational oracle on random matrices") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> size(1, 20);
  std::uniform_int_distribution<int> kind(0, 2);
  const PrimeField f(kLargestPrimeU63);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = size(rng), cols = size(rng);
    const int k = kind(rng);
    const std::size_t cap = k == 0 ? 0 : std::uniform_int_distribution<std::size_t>(1, std::min(rows, cols))(rng);
    const auto rm = random_matrix(rng, rows, cols, 3, cap, k == 2 ? 0.7 : 0.3);
    std::vector<std::vector<oracle::Rational>> q(rows, std::vector<oracle::Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) q[i][j] = rm.dense[i][j];
    }
    const std::size_t expected = oracle::rational_rank(q);
    CAPTURE(trial);
    for (double threshold : {0.0, 0.01, 0.2, 1.0}) {
      CHECK(rank_mod_p(rm.sparse, f, {threshold}) == expected);
    }
    CHECK(rank_mod_p(transpose(rm, cols), f) == expected);
  }
}

TEST_CASE("rank mod small primes against the modular oracle") {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 50; ++trial) {
      const auto rm = random_matrix(rng, 12, 15, 4, 0, 0.5);
      std::vector<std::vector<std::uint64_t>> d;
      for (const auto& row : rm.dense) {
        std::vector<std::uint64_t> r;
        for (auto v : row) r.push_back(oracle::reduce_mod(v, p));
        d.push_back(std::move(r));
      }
      const std::size_t expected = oracle::modular_rank(d, p);
      CHECK(rank_mod_p(rm.sparse, f) == expected);
      CHECK(rank_mod_p(rm.sparse, f, {1.0}) == expected);
      CHECK(rank_mod_p(transpose(rm, 15), f) == expected);
    }
  }
}

TEST_CASE("larger sparse matrices take both phases") {
  std::mt19937_64 rng(9);
  const PrimeField f(kLargestPrimeU63);
  const auto rm = random_matrix(rng, 120, 90, 2, 0, 0.95);
  std::vector<std::vector<std::uint64_t>> d;
  for (const auto& row : rm.dense) {
    std::vector<std::uint64_t> r;
    for (auto v : row) r.push_back(oracle::reduce_mod(v, kLargestPrimeU63));
    d.push_back(std::move(r));
  }
  const std::size_t expected = oracle::modular_rank(d, kLargestPrimeU63);
  const auto stats = rank_mod_p_stats(rm.sparse, f, {0.2});
  CHECK(stats.rank == expected);
  CHECK(stats.sparse_pivots > 0);
  CHECK(rank_mod_p(rm.sparse, f, {1.0}) == expected);
  CHECK(rank_mod_p(rm.sparse, f, {0.0}) == expected);
}

TEST_CASE("rank is a pure function of the matrix") {
  std::mt19937_64 rng(1);
  const auto rm = random_matrix(rng, 30, 30, 3, 17, 0.6);
  const PrimeField f(kLargestPrimeU63);
  const auto a = rank_mod_p_stats(rm.sparse, f);
  const auto b = rank_mod_p_stats(rm.sparse, f);
  CHECK(a.rank == b.rank);
  CHECK(a.sparse_pivots == b.sparse_pivots);
  CHECK(a.dense_rows == b.dense_rows);
}

TEST_CASE("edge cases") {
  const PrimeField f(kLargestPrimeU63);
  CHECK(rank_mod_p(SparseRowMatrix(0, 5), f) == 0);
  SparseRowMatrix zeros(0, 3);
  zeros.add_row(SparseRow{});
  zeros.add_row(SparseRow{});
  CHECK(rank_mod_p(zeros, f) == 0);
  SparseRowMatrix multiple(0, 2);
  multiple.add_row(SparseRow{{0, 3}, {1, 6}});
  multiple.add_row(SparseRow{{0, 1}, {1, 2}});
  CHECK(rank_mod_p(multiple, f) == 1);
  // 3 divides the determinant 3.
  SparseRowMatrix det3(0, 2);
  det3.add_row(SparseRow{{0, 2}, {1, 1}});
  det3.add_row(SparseRow{{0, 1}, {1, 2}});
  CHECK(rank_mod_p(det3, f) == 2);
  CHECK(rank_mod_p(det3, PrimeField(3)) == 1);
}

TEST_CASE("sparse matrix validation and triples") {
  SparseRowMatrix m(3, 4);
  m.add_row(SparseRow{{0, 1}, {3, -1}});
  m.add_row(SparseRow{{1, 2}});
  CHECK_THROWS(m.add_row(SparseRow{{2, 1}, {1, 1}}));
  CHECK_THROWS(m.add_row(SparseRow{{1, 0}}));
  CHECK_THROWS(m.add_row(SparseRow{{4, 1}}));
  CHECK(m.rows() == 2);
  CHECK(m.nonzeros() == 3);
  CHECK_FALSE(m.has_unit_entries());

  std::stringstream ss;
  m.write_triples(ss);
  CHECK(ss.str().rfind("cols=4 rows=2 degree=3", 0) == 0);
  const auto back = SparseRowMatrix::read_triples(ss);
  CHECK(back.rows() == 2);
  CHECK(back.columns() == 4);
  CHECK(back.degree() == 3);
  for (std::size_t r = 0; r < 2; ++r) {
    CHECK(std::equal(back.row(r).begin(), back.row(r).end(), m.row(r).begin(), m.row(r).end()));
  }
}
