#ifndef OPERAD_SERIES_HPP
#define OPERAD_SERIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace operad {

using Rational = boost::multiprecision::cpp_rational;

// c_1 x + c_2 x^2 + ... + c_N x^N + O(x^{N+1}) with exact rational
// coefficients. The constant term is always zero.
class TruncatedRationalSeries {
 public:
  TruncatedRationalSeries() = default;
  // coefficients[k] is the coefficient of x^{k+1}; truncation is their count.
  explicit TruncatedRationalSeries(std::vector<Rational> coefficients);

  static TruncatedRationalSeries identity(int truncation);  // x

  int truncation() const noexcept { return static_cast<int>(coefficients_.size()); }
  // Coefficient of x^n for 1 <= n <= truncation.
  const Rational& operator[](int n) const;
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  TruncatedRationalSeries truncated(int n) const;
  bool is_zero() const;

  friend bool operator==(const TruncatedRationalSeries&, const TruncatedRationalSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

// sum_{n=1}^{N} (-1)^n dims[n-1] / n! x^n. dims[0] is dim P(1).
TruncatedRationalSeries poincare(std::span<const std::uint64_t> dims, int truncation);

// f(g(x)) through degree N, by Horner's rule with every product truncated at N.
TruncatedRationalSeries compose(const TruncatedRationalSeries& f, const TruncatedRationalSeries& g, int truncation);

struct GkDefect {
  TruncatedRationalSeries defect;  // g_P(g_P!(x)) - x
  std::optional<int> first_degree;
  Rational first_value;
};

GkDefect gk_defect(const TruncatedRationalSeries& g_p, const TruncatedRationalSeries& g_dual, int truncation);

// "-x + x^2 - 3/2*x^3"; the zero series renders as "0".
std::string to_string(const TruncatedRationalSeries& s);
std::string to_string(const Rational& q);

}  // namespace operad

#endif  // OPERAD_SERIES_HPP
