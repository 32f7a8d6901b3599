#ifndef OPERAD_TESTS_DENSE_RANK_HPP
#define OPERAD_TESTS_DENSE_RANK_HPP

// Textbook dense Gaussian elimination, over the rationals and over Z/p with
// plain 128-bit arithmetic. Slow and obviously correct.

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

inline std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  for (; e; e >>= 1) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
  }
  return static_cast<std::uint64_t>(r);
}

// Entries already reduced to [0, p).
inline std::size_t modular_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = mod_pow(a[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const auto f = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a[r][c]) * inv % p);
      for (std::size_t k = c; k < cols; ++k) {
        const auto t = static_cast<std::uint64_t>(static_cast<unsigned __int128>(f) * a[rank][k] % p);
        a[r][k] = a[r][k] >= t ? a[r][k] - t : a[r][k] + (p - t);
      }
    }
    ++rank;
  }
  return rank;
}

inline std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
}

}  // namespace oracle

#endif  // OPERAD_TESTS_DENSE_RANK_HPP
