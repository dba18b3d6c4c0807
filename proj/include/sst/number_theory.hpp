#pragma once

#include <cstdint>
#include <vector>

namespace sst {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n. Throws NotPrime if p is not prime.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

bool is_prime_power(std::uint64_t n);

/// The prime of a prime power n > 1, or 0 otherwise.
std::uint64_t prime_of_power(std::uint64_t n);

}  // namespace sst
