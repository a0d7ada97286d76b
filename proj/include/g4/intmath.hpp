#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace g4 {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Exact floor(sqrt(n)).
u64 isqrt_u64(u64 n);

// m = floor(2*sqrt(q)), computed as isqrt(4q). Requires q < 2^62.
inline u64 floor_two_sqrt(u64 q) { return isqrt_u64(4 * q); }

bool is_prime_u64(u64 n);

// Ascending (prime, exponent) pairs. n >= 1.
std::vector<std::pair<u64, int>> factor_u64(u64 n);

// q = p^e with p prime; nullopt when q is not a prime power or q < 2.
std::optional<std::pair<u64, int>> prime_power(u64 q);

u64 euler_phi(u64 n);

constexpr u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr u64 digest_combine(u64 h, u64 v) { return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL)); }

}  // namespace g4
