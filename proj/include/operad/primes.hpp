#ifndef OPERAD_PRIMES_HPP
#define OPERAD_PRIMES_HPP

#include <cstdint>

namespace operad {

// 2^63 - 25, the largest prime below 2^63.
inline constexpr std::uint64_t kLargestPrimeU63 = 9223372036854775783ULL;
inline constexpr std::uint64_t kPrimeLimit = 1ULL << 63;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin; the first twelve prime bases are exact for all
// 64-bit inputs. Values at or above 2^63 are outside the supported range and
// return false.
bool is_prime_u63(std::uint64_t m);

}  // namespace operad

#endif  // OPERAD_PRIMES_HPP
