#include "g4/intmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace g4 {

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

namespace {
u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}
}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin bases for 64-bit inputs
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {
u64 pollard_rho(u64 n, u64 c0) {
  // Brent cycle detection
  for (u64 c = c0;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = (mulmod_u64(y, y, n) + c) % n;
      int k = 0;
      while (k < lam && d == 1) {
        int span = std::min(lam - k, 128);
        u64 ys = y;
        for (int i = 0; i < span; ++i) {
          y = (mulmod_u64(y, y, n) + c) % n;
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        if (d == n) {
          // backtrack one step at a time
          d = 1;
          y = ys;
          while (d == 1) {
            y = (mulmod_u64(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
          }
          break;
        }
        k += span;
      }
      lam *= 2;
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  for (u64 p : {2ULL, 3ULL, 5ULL}) {
    if (n % p == 0) {
      out.push_back(p);
      factor_rec(n / p, out);
      return;
    }
  }
  u64 d = pollard_rho(n, 1);
  factor_rec(d, out);
  factor_rec(n / d, out);
}
}  // namespace

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  std::vector<u64> primes;
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.push_back({p, 1});
  }
  return out;
}

std::optional<std::pair<u64, int>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factor_u64(q);
  if (f.size() != 1) return std::nullopt;
  return std::pair<u64, int>{f[0].first, f[0].second};
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (const auto& [p, e] : factor_u64(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

}  // namespace g4
