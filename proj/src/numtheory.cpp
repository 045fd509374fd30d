#include "subnorm/numtheory.hpp"

namespace subnorm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      result.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) result.push_back(n);
  return result;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::optional<std::uint64_t> prime_of_prime_power(std::uint64_t n) {
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return std::nullopt;
  return ps.front();
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace subnorm
