#include "operad/series.hpp"

#include "operad/error.hpp"

namespace operad {

namespace {

// Product of two truncated series (constant terms zero), cut at degree n.
std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t degree = (i + 1) + (j + 1);
      if (degree > static_cast<std::size_t>(n)) break;
      out[degree - 1] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

TruncatedRationalSeries::TruncatedRationalSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {}

TruncatedRationalSeries TruncatedRationalSeries::identity(int truncation) {
  if (truncation < 1) throw Error("series: truncation must be positive");
  std::vector<Rational> c(static_cast<std::size_t>(truncation));
  c[0] = 1;
  return TruncatedRationalSeries(std::move(c));
}

const Rational& TruncatedRationalSeries::operator[](int n) const {
  if (n < 1 || n > truncation()) throw Error("series: degree " + std::to_string(n) + " beyond truncation");
  return coefficients_[static_cast<std::size_t>(n - 1)];
}

TruncatedRationalSeries TruncatedRationalSeries::truncated(int n) const {
  if (n > truncation()) throw Error("series: cannot extend a truncated series");
  return TruncatedRationalSeries({coefficients_.begin(), coefficients_.begin() + n});
}

bool TruncatedRationalSeries::is_zero() const {
  for (const auto& c : coefficients_) {
    if (c != 0) return false;
  }
  return true;
}

TruncatedRationalSeries poincare(std::span<const std::uint64_t> dims, int truncation) {
  if (truncation < 1) throw Error("poincare: truncation must be positive");
  if (dims.size() < static_cast<std::size_t>(truncation)) {
    throw Error("poincare: need " + std::to_string(truncation) + " dimensions, have " + std::to_string(dims.size()));
  }
  std::vector<Rational> c;
  boost::multiprecision::cpp_int factorial = 1;
  for (int n = 1; n <= truncation; ++n) {
    factorial *= n;
    Rational term(boost::multiprecision::cpp_int(dims[static_cast<std::size_t>(n - 1)]), factorial);
    c.push_back(n % 2 == 0 ? term : -term);
  }
  return TruncatedRationalSeries(std::move(c));
}

TruncatedRationalSeries compose(const TruncatedRationalSeries& f, const TruncatedRationalSeries& g, int truncation) {
  if (truncation < 1) throw Error("compose: truncation must be positive");
  if (f.truncation() < truncation || g.truncation() < truncation) {
    throw Error("compose: inputs are truncated below degree " + std::to_string(truncation));
  }
  const auto gc = g.truncated(truncation).coefficients();
  // f(g) = g (c_1 + g (c_2 + ... + g c_N)).
  std::vector<Rational> acc(static_cast<std::size_t>(truncation));
  for (int n = truncation; n >= 1; --n) {
    // acc currently holds the tail as a series without constant term; add
    // c_n as the constant term by multiplying (c_n + acc) by g.
    std::vector<Rational> next = multiply(acc, gc, truncation);
    for (std::size_t k = 0; k < gc.size(); ++k) next[k] += f[n] * gc[k];
    acc = std::move(next);
  }
  return TruncatedRationalSeries(std::move(acc));
}

GkDefect gk_defect(const TruncatedRationalSeries& g_p, const TruncatedRationalSeries& g_dual, int truncation) {
  auto coefficients = compose(g_p, g_dual, truncation).coefficients();
  coefficients[0] -= 1;
  GkDefect out{TruncatedRationalSeries(std::move(coefficients)), std::nullopt, 0};
  for (int n = 1; n <= truncation; ++n) {
    if (out.defect[n] != 0) {
      out.first_degree = n;
      out.first_value = out.defect[n];
      break;
    }
  }
  return out;
}

std::string to_string(const Rational& q) {
  std::string out = boost::multiprecision::numerator(q).str();
  if (boost::multiprecision::denominator(q) != 1) out += "/" + boost::multiprecision::denominator(q).str();
  return out;
}

std::string to_string(const TruncatedRationalSeries& s) {
  std::string out;
  for (int n = 1; n <= s.truncation(); ++n) {
    const Rational& c = s[n];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? Rational(-c) : c;
    const std::string power = n == 1 ? "x" : "x^" + std::to_string(n);
    out += magnitude == 1 ? power : to_string(magnitude) + "*" + power;
  }
  return out.empty() ? "0" : out;
}

}  // namespace operad
