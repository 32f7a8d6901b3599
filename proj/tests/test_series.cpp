#include <random>

#include "doctest.h"
#include "operad/series.hpp"

using namespace operad;

namespace {

using Q = Rational;

TruncatedRationalSeries series(std::initializer_list<Q> c) { return TruncatedRationalSeries(std::vector<Q>(c)); }

// Composition by expanding sum_k f_k g^k with full polynomial products, then
// truncating. Independent of the Horner evaluation in the library.
TruncatedRationalSeries naive_compose(const TruncatedRationalSeries& f, const TruncatedRationalSeries& g, int n) {
  std::vector<Q> gpoly(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) gpoly[static_cast<std::size_t>(k)] = g[k];
  std::vector<Q> power{1}, total(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    std::vector<Q> next(power.size() + gpoly.size() - 1);
    for (std::size_t i = 0; i < power.size(); ++i) {
      for (std::size_t j = 0; j < gpoly.size(); ++j) next[i + j] += power[i] * gpoly[j];
    }
    power = std::move(next);
    for (int d = 1; d <= n && static_cast<std::size_t>(d) < power.size(); ++d) {
      total[static_cast<std::size_t>(d)] += f[k] * power[static_cast<std::size_t>(d)];
    }
  }
  return TruncatedRationalSeries(std::vector<Q>(total.begin() + 1, total.end()));
}

TruncatedRationalSeries random_series(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Q> c;
  for (int i = 0; i < n; ++i) c.emplace_back(num(rng), den(rng));
  return TruncatedRationalSeries(std::move(c));
}

}  // namespace

TEST_CASE("generating series of the right-alternative operad and its dual") {
  const std::vector<std::uint64_t> ralt{1, 2, 9, 60, 530};
  const std::vector<std::uint64_t> dual{1, 2, 3, 0, 0};
  CHECK(poincare(ralt, 5) == series({-1, 1, Q(-3, 2), Q(5, 2), Q(-53, 12)}));
  CHECK(poincare(dual, 5) == series({-1, 1, Q(-1, 2), 0, 0}));
}

TEST_CASE("generating series of the alternative operad and its dual") {
  const std::vector<std::uint64_t> alt{1, 2, 7, 32, 175, 1080};
  const std::vector<std::uint64_t> dual{1, 2, 5, 12, 15, 0};
  CHECK(poincare(alt, 6) == series({-1, 1, Q(-7, 6), Q(4, 3), Q(-35, 24), Q(3, 2)}));
  CHECK(poincare(dual, 6) == series({-1, 1, Q(-5, 6), Q(1, 2), Q(-1, 8), 0}));
}

TEST_CASE("defects") {
  const std::vector<std::uint64_t> ralt{1, 2, 9, 60, 530}, ralt_dual{1, 2, 3, 0, 0};
  const auto ra = gk_defect(poincare(ralt, 5), poincare(ralt_dual, 5), 5);
  CHECK(ra.defect == series({0, 0, 0, 0, Q(1, 6)}));
  REQUIRE(ra.first_degree);
  CHECK(*ra.first_degree == 5);
  CHECK(ra.first_value == Q(1, 6));

  const std::vector<std::uint64_t> alt{1, 2, 7, 32, 175, 1080}, alt_dual{1, 2, 5, 12, 15, 0};
  const auto a = gk_defect(poincare(alt, 6), poincare(alt_dual, 6), 6);
  CHECK(*a.first_degree == 6);
  CHECK(a.first_value == Q(-11, 72));
  CHECK(to_string(a.defect) == "-11/72*x^6");
}

TEST_CASE("associative control through degree 8") {
  std::vector<std::uint64_t> fact{1};
  for (std::uint64_t n = 2; n <= 8; ++n) fact.push_back(fact.back() * n);
  const auto g = poincare(fact, 8);
  for (int n = 1; n <= 8; ++n) CHECK(g[n] == (n % 2 ? -1 : 1));
  const auto d = gk_defect(g, g, 8);
  CHECK(d.defect.is_zero());
  CHECK_FALSE(d.first_degree);
}

TEST_CASE("composition against naive expansion") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 8;
    const auto f = random_series(rng, n), g = random_series(rng, n);
    CHECK(compose(f, g, n) == naive_compose(f, g, n));
  }
}

TEST_CASE("composition identities") {
  std::mt19937 rng(99);
  const int n = 7;
  const auto x = TruncatedRationalSeries::identity(n);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_series(rng, n), g = random_series(rng, n), h = random_series(rng, n);
    CHECK(compose(f, x, n) == f);
    CHECK(compose(x, f, n) == f);
    CHECK(compose(compose(f, g, n), h, n) == compose(f, compose(g, h, n), n));
  }
  // g(x) = -x is its own inverse.
  const auto minus = series({-1, 0, 0});
  CHECK(compose(minus, minus, 3) == TruncatedRationalSeries::identity(3));
  // x/(1+x) and x/(1-x) are inverse.
  const auto a = series({1, -1, 1, -1, 1}), b = series({1, 1, 1, 1, 1});
  CHECK(compose(a, b, 5) == TruncatedRationalSeries::identity(5));
}

TEST_CASE("truncation rules") {
  const auto f = series({1, 2, 3});
  CHECK(f.truncated(2) == series({1, 2}));
  CHECK_THROWS(f.truncated(4));
  CHECK_THROWS(f[0]);
  CHECK_THROWS(f[4]);
  CHECK_THROWS(compose(f, f, 4));
  CHECK_THROWS(poincare(std::vector<std::uint64_t>{1, 2}, 3));
  CHECK(compose(f, f, 2) == series({1, 4}));
}

TEST_CASE("printing") {
  CHECK(to_string(series({-1, 1, Q(-3, 2)})) == "-x + x^2 - 3/2*x^3");
  CHECK(to_string(series({0, 0})) == "0");
  CHECK(to_string(series({0, Q(1, 6)})) == "1/6*x^2");
  CHECK(to_string(Q(-11, 72)) == "-11/72");
}
