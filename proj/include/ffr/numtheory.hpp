#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffr {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

// Distinct prime divisors by trial division, ascending.
std::vector<u64> prime_divisors(u64 n);

// base^exp, or nullopt if the result does not fit in 63 bits.
std::optional<u64> checked_pow(u64 base, unsigned exp);

u64 mulmod64(u64 a, u64 b, u64 m);
u64 powmod64(u64 a, u64 e, u64 m);

std::string to_string_u128(u128 v);

}  // namespace ffr
