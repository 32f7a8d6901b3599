#include "operad/prime_field.hpp"

#include <string>

#include "operad/error.hpp"
#include "operad/primes.hpp"

namespace operad {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime_u63(p)) throw Error(std::to_string(p) + " is not a prime below 2^63");
  if (p & 1) {
    std::uint64_t inv = p;  // correct to 3 bits; each Newton step doubles that
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    neg_pinv_ = 0 - inv;
  }
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw Error("inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on signed 128-bit values.
  __int128 r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    const __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const __int128 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  __int128 out = s0 % static_cast<__int128>(p_);
  if (out < 0) out += p_;
  return static_cast<std::uint64_t>(out);
}

PrimeField::Scaler PrimeField::scaler(std::uint64_t c) const noexcept {
  Scaler s;
  s.p_ = p_;
  s.c_ = c;
  s.odd_ = (p_ & 1) != 0;
  if (s.odd_) {
    s.neg_pinv_ = neg_pinv_;
    s.c_mont_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) << 64) % p_);
  }
  return s;
}

}  // namespace operad
