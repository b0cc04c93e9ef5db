#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclofield {

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// ascending prime order. factorize(1) is empty.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m);

/// Inverse of a modulo m; throws std::invalid_argument if gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

std::vector<std::uint32_t> primes_upto(std::uint32_t n);

struct PrimePower {
    std::uint32_t p;
    std::uint32_t f;
    std::uint32_t q;  // p^f
};

/// All prime powers p^f <= n with f >= 1, ascending by value.
std::vector<PrimePower> prime_powers_upto(std::uint32_t n);

/// All partitions of n into descending positive parts, in reverse
/// lexicographic order: [n], [n-1,1], ..., [1,...,1].
std::vector<std::vector<std::uint32_t>> partitions_desc(std::uint32_t n);

}  // namespace cyclofield
