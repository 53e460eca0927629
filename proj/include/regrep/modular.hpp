#pragma once

#include <cstdint>
#include <vector>

namespace regrep {

// Word-level number theory used by the ring layer and the mod-ell character
// machinery.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Least primitive root of the prime ell.
std::uint64_t primitive_root(std::uint64_t ell);

// Smallest prime ell with ell = 1 (mod m) and ell > lower_bound.
std::uint64_t prime_congruent_one(std::uint64_t m, std::uint64_t lower_bound);

// Integer square root (floor).
std::uint64_t isqrt(std::uint64_t n);

// Returns true and sets root when n is a perfect square.
bool perfect_square(std::uint64_t n, std::uint64_t& root);

}  // namespace regrep
