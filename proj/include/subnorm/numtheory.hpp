#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace subnorm {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// The prime p when n = p^a with a >= 1; nullopt otherwise (including n = 1).
std::optional<std::uint64_t> prime_of_prime_power(std::uint64_t n);

/// n == p^a for some a >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);

}  // namespace subnorm
