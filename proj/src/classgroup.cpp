#include "g4/classgroup.hpp"

#include <numeric>
#include <stdexcept>

namespace g4 {

namespace {
bool is_fundamental(i64 d) {
  if (d >= 0) return false;
  i64 m = -d;
  i64 r4 = ((d % 4) + 4) % 4;
  if (r4 == 1) {
    // squarefree check
    for (i64 f = 2; f * f <= m; ++f)
      if (m % (f * f) == 0) return false;
    return true;
  }
  if (r4 != 0 || m % 4 != 0) return false;
  i64 q = m / 4;
  i64 qr = (((-q) % 4) + 4) % 4;  // residue of the signed quotient d/4
  if (qr != 2 && qr != 3) return false;
  for (i64 f = 2; f * f <= q; ++f)
    if (q % (f * f) == 0) return false;
  return true;
}
}  // namespace

Discriminant analyze_discriminant(i64 delta) {
  if (delta >= 0) throw std::invalid_argument("discriminant must be negative");
  i64 r4 = ((delta % 4) + 4) % 4;
  if (r4 != 0 && r4 != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
  u64 m = static_cast<u64>(-delta);
  i64 s = 1, k = 1;
  for (const auto& [p, e] : factor_u64(m)) {
    if (e & 1) s *= static_cast<i64>(p);
    for (int i = 0; i < e / 2; ++i) k *= static_cast<i64>(p);
  }
  i64 d0;
  i64 f;
  if ((((-s) % 4) + 4) % 4 == 1) {
    d0 = -s;
    f = k;
  } else {
    d0 = -4 * s;
    if (k % 2 != 0) throw std::logic_error("conductor parity");
    f = k / 2;
  }
  int r = 0;
  for (const auto& [p, e] : factor_u64(static_cast<u64>(-d0))) {
    (void)e;
    ++r;
  }
  return {delta, d0, f, r};
}

std::vector<QuadForm> reduced_forms(i64 delta) {
  if (delta >= 0) throw std::invalid_argument("discriminant must be negative");
  i64 r4 = ((delta % 4) + 4) % 4;
  if (r4 != 0 && r4 != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
  std::vector<QuadForm> out;
  i64 m = -delta;
  for (i64 a = 1; 3 * a * a <= m; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      i64 num = b * b - delta;
      if (num % (4 * a)) continue;
      i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

i64 class_number(i64 delta) { return static_cast<i64>(reduced_forms(delta).size()); }

i64 kronecker_class_number(i64 delta) {
  if (delta >= 0) throw std::invalid_argument("discriminant must be negative");
  i64 total = 0;
  for (i64 f = 1; f * f <= -delta; ++f) {
    if (delta % (f * f)) continue;
    i64 d = delta / (f * f);
    i64 r4 = ((d % 4) + 4) % 4;
    if (r4 == 0 || r4 == 1) total += class_number(d);
  }
  return total;
}

bool exponent_exceeds_two(i64 delta0) {
  if (!is_fundamental(delta0)) throw std::invalid_argument("discriminant is not fundamental");
  Discriminant d = analyze_discriminant(delta0);
  i64 ambiguous = i64{1} << (d.r - 1);
  return class_number(delta0) != ambiguous;
}

i64 hayashida_N(i64 delta, i64 h) {
  if (delta >= 0 || !is_prime_u64(static_cast<u64>(-delta)) || -delta <= 3)
    throw std::invalid_argument("|delta| must be a prime above 3");
  if (h % 2 == 0) throw std::invalid_argument("class number must be odd");
  return (-delta + 23) / 24 + (h - 1) / 2;
}

Rational genus2_lower_bound(i64 delta0) {
  if (!is_fundamental(delta0)) throw std::invalid_argument("discriminant is not fundamental");
  if (-delta0 <= 4) throw std::invalid_argument("|delta0| must exceed 4");
  Discriminant d = analyze_discriminant(delta0);
  i64 num = class_number(delta0) * static_cast<i64>(euler_phi(static_cast<u64>(-delta0)));
  i64 den = 12 * (i64{1} << d.r);
  i64 g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace g4
