// Primality and integer factorization at desk scale.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "taylorcert/exact.hpp"

namespace taylorcert {

/// Deterministic Miller-Rabin; the witness set {2, 3, 5, ..., 37} is exact
/// for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// All primes <= limit, ascending (Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Prime factorization of |z| as ascending (prime, exponent) pairs. Trial
/// division handles factors below 10^6, Pollard-Brent the rest. Throws on 0.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& z);

/// Distinct primes dividing |z|, ascending. Empty for |z| = 1.
std::vector<BigInt> prime_divisors(const BigInt& z);

/// Renders a factorization as "-2^16*3^5*11"; sign from `sign`.
std::string format_factorization(int sign, const std::vector<std::pair<BigInt, unsigned>>& factors);

}  // namespace taylorcert
