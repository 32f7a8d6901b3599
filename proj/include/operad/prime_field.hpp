#ifndef OPERAD_PRIME_FIELD_HPP
#define OPERAD_PRIME_FIELD_HPP

#include <cstdint>

namespace operad {

// GF(p) for a prime 2 <= p < 2^63. Residues are plain uint64 values in [0, p).
// Products go through 128-bit intermediates.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t reduce(std::int64_t e) const noexcept {
    const std::int64_t r = e % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;  // < 2^64 since both < 2^63
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  // Throws on zero.
  std::uint64_t inv(std::uint64_t a) const;

  // Multiplication by a fixed residue c, the inner operation of row updates.
  // Odd moduli use Montgomery reduction against c * 2^64 mod p, which avoids
  // a 128-bit division per product.
  class Scaler {
   public:
    std::uint64_t operator()(std::uint64_t x) const noexcept {
      if (!odd_) return static_cast<std::uint64_t>(static_cast<unsigned __int128>(c_) * x % p_);
      const unsigned __int128 t = static_cast<unsigned __int128>(c_mont_) * x;
      const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_pinv_;
      const std::uint64_t r =
          static_cast<std::uint64_t>((t + static_cast<unsigned __int128>(m) * p_) >> 64);
      return r >= p_ ? r - p_ : r;
    }

   private:
    friend class PrimeField;
    std::uint64_t p_ = 0, c_ = 0, c_mont_ = 0, neg_pinv_ = 0;
    bool odd_ = false;
  };

  Scaler scaler(std::uint64_t c) const noexcept;

 private:
  std::uint64_t p_;
  std::uint64_t neg_pinv_ = 0;  // -p^{-1} mod 2^64, odd p only
};

}  // namespace operad

#endif  // OPERAD_PRIME_FIELD_HPP
