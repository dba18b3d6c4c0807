#include "sst/number_theory.hpp"

#include "sst/errors.hpp"

namespace sst {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::uint64_t part = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

std::uint64_t prime_of_power(std::uint64_t n) {
  if (n < 2) return 0;
  const auto primes = prime_divisors(n);
  return primes.size() == 1 ? primes.front() : 0;
}

bool is_prime_power(std::uint64_t n) { return n == 1 || prime_of_power(n) != 0; }

}  // namespace sst
