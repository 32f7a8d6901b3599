#include <random>

#include "doctest.h"
#include "naive_ideal.hpp"
#include "octonions.hpp"
#include "operad/consequences.hpp"
#include "operad/primes.hpp"
#include "operad/rank.hpp"

using namespace operad;

namespace {

std::uint64_t dim_at(const std::string& name, int n, std::uint64_t p = kLargestPrimeU63) {
  return operad_dim_mod_p(preset(name).identities, n, p);
}

}  // namespace

TEST_CASE("identity row of the right-alternative law") {
  const auto row = identity_row(preset("right-alternative").identities[0]);
  REQUIRE(row.size() == 4);
  int plus = 0, minus = 0;
  for (const auto& e : row) (e.value == 1 ? plus : minus)++;
  CHECK(plus == 2);
  CHECK(minus == 2);
  CHECK(std::is_sorted(row.begin(), row.end()));
}

TEST_CASE("right-alternative dimensions") {
  // 1, 2, 9, 60, 530
  const std::uint64_t expected[] = {1, 2, 9, 60, 530};
  for (int n = 1; n <= 5; ++n) CHECK(dim_at("right-alternative", n) == expected[n - 1]);
}

TEST_CASE("alternative dimensions") {
  // 1, 2, 7, 32, 175
  const std::uint64_t expected[] = {1, 2, 7, 32, 175};
  for (int n = 1; n <= 5; ++n) CHECK(dim_at("alternative", n) == expected[n - 1]);
}

TEST_CASE("left and right alternative are mirror images") {
  for (int n = 3; n <= 5; ++n) CHECK(dim_at("left-alternative", n) == dim_at("right-alternative", n));
}

TEST_CASE("associative operad has dimension n!") {
  for (int n = 1; n <= 6; ++n) CHECK(dim_at("associative", n) == factorial(n));
}

TEST_CASE("duals are nilpotent") {
  const std::uint64_t ra[] = {1, 2, 3, 0, 0};
  const std::uint64_t alt[] = {1, 2, 5, 12, 15};
  for (int n = 1; n <= 5; ++n) {
    CHECK(dim_at("dual-right-alternative", n) == ra[n - 1]);
    CHECK(dim_at("dual-left-alternative", n) == ra[n - 1]);
    CHECK(dim_at("dual-alternative", n) == alt[n - 1]);
  }
}

TEST_CASE("characteristic 3") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(dim_at("dual-alternative", n, 3) == (1ULL << n) - static_cast<std::uint64_t>(n));
    CHECK(dim_at("alternative", n, 3) == dim_at("alternative", n));
  }
}

TEST_CASE("consequences vanish on the octonions") {
  std::mt19937_64 rng(2024);
  for (const char* name : {"alternative", "right-alternative", "left-alternative"}) {
    for (int n = 3; n <= 4; ++n) {
      const auto m = expand_consequences(preset(name).identities, n);
      const auto& basis = MonomialBasis::of(n);
      CAPTURE(name);
      CAPTURE(n);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<oracle::Octonion> values;
        for (int v = 0; v < n; ++v) values.push_back(oracle::random_octonion(rng));
        std::size_t failures = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
          oracle::Octonion sum{};
          for (const auto& e : m.row(r)) {
            const auto term = oracle::evaluate(basis.at({e.column}), values);
            for (std::size_t k = 0; k < 8; ++k) sum[k] += e.value * term[k];
          }
          for (auto c : sum) failures += c != 0;
        }
        CHECK(failures == 0);
      }
    }
  }
}

TEST_CASE("octonions are alternative and not associative") {
  std::mt19937_64 rng(5);
  const auto x = oracle::random_octonion(rng), y = oracle::random_octonion(rng), z = oracle::random_octonion(rng);
  using oracle::multiply;
  CHECK(multiply(multiply(x, x), y) == multiply(x, multiply(x, y)));
  CHECK(multiply(multiply(y, x), x) == multiply(y, multiply(x, x)));
  CHECK(multiply(multiply(x, y), z) != multiply(x, multiply(y, z)));
  // The associativity rows do not all vanish, so the check above has teeth.
  const auto m = expand_consequences(preset("associative").identities, 3);
  std::vector<oracle::Octonion> values{x, y, z};
  bool some_nonzero = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    oracle::Octonion sum{};
    for (const auto& e : m.row(r)) {
      const auto t = oracle::evaluate(MonomialBasis::of(3).at({e.column}), values);
      for (std::size_t k = 0; k < 8; ++k) sum[k] += e.value * t[k];
    }
    for (auto c : sum) some_nonzero |= c != 0;
  }
  CHECK(some_nonzero);
}

TEST_CASE("brute-force T-ideal agrees for every preset") {
  for (const auto& name : preset_names()) {
    for (int n = 3; n <= 4; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const auto& ids = preset(name).identities;
      CHECK(operad_dim_mod_p(ids, n, kLargestPrimeU63) == oracle::naive_dim_mod_p(ids, n, kLargestPrimeU63));
      CHECK(operad_dim_mod_p(ids, n, 3) == oracle::naive_dim_mod_p(ids, n, 3));
    }
  }
}

TEST_CASE("brute-force agrees on a non-preset identity") {
  const std::vector<Identity> ids{linearize(parse_identity("(x*x)*x = 0")), parse_identity("x*y - y*x = 0")};
  std::vector<Identity> cubic{ids[0]};
  for (int n = 3; n <= 4; ++n) {
    CHECK(operad_dim_mod_p(cubic, n, kLargestPrimeU63) == oracle::naive_dim_mod_p(cubic, n, kLargestPrimeU63));
  }
  // Mixed degrees: commutativity plus the linearized cube.
  for (int n = 2; n <= 4; ++n) {
    CHECK(operad_dim_mod_p(ids, n, kLargestPrimeU63) == oracle::naive_dim_mod_p(ids, n, kLargestPrimeU63));
  }
}

TEST_CASE("rank over the rationals at degree 3") {
  for (const auto& name : preset_names()) {
    const auto m = expand_consequences(preset(name).identities, 3);
    std::vector<std::vector<oracle::Rational>> dense(m.rows(), std::vector<oracle::Rational>(m.columns()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& e : m.row(r)) dense[r][e.column] = e.value;
    }
    CHECK(oracle::rational_rank(dense) == rank_mod_p(m, PrimeField(kLargestPrimeU63)));
  }
}

TEST_CASE("generation is deterministic") {
  const auto a = expand_consequences(preset("alternative").identities, 4);
  const auto b = expand_consequences(preset("alternative").identities, 4);
  REQUIRE(a.rows() == b.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    CHECK(std::equal(a.row(r).begin(), a.row(r).end(), b.row(r).begin(), b.row(r).end()));
  }
}

TEST_CASE("matrix shape") {
  const auto m = expand_consequences(preset("right-alternative").identities, 4);
  CHECK(m.columns() == 120);
  CHECK(m.degree() == 4);
  CHECK(m.has_unit_entries());
  CHECK(expand_consequences(std::vector<Identity>{}, 3).rows() == 0);
}

TEST_CASE("invalid inputs") {
  const auto& ra = preset("right-alternative").identities;
  CHECK_THROWS(expand_consequences(ra, 2));
  CHECK_THROWS(expand_consequences(ra, 0));
  const std::vector<Identity> nonlinear{parse_identity("(x*y)*y = x*(y*y)")};
  CHECK_THROWS(expand_consequences(nonlinear, 3));
  // Identities above the degree are skipped when counting dimensions.
  CHECK(operad_dim_mod_p(ra, 2, kLargestPrimeU63) == 2);
  CHECK(operad_dim_mod_p(ra, 1, kLargestPrimeU63) == 1);
}
