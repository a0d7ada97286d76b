#pragma once

#include <vector>

#include "g4/intmath.hpp"

namespace g4 {

// Negative discriminant split as delta = delta0 * conductor^2 with delta0
// fundamental; r counts the distinct primes dividing delta0.
struct Discriminant {
  i64 delta;
  i64 delta0;
  i64 conductor;
  int r;
};

Discriminant analyze_discriminant(i64 delta);

// Reduced primitive forms (a, b, c) of discriminant delta, b^2 - 4ac = delta,
// -a < b <= a <= c, b >= 0 when a == c.
struct QuadForm {
  i64 a, b, c;
};
std::vector<QuadForm> reduced_forms(i64 delta);

// h(delta): number of reduced primitive forms. delta < 0, delta = 0,1 mod 4.
i64 class_number(i64 delta);

// H(delta) = sum of h(delta/f^2) over f with f^2 | delta and delta/f^2 a
// valid discriminant. delta < 0.
i64 kronecker_class_number(i64 delta);

// True iff the class group of the fundamental discriminant delta0 has
// exponent > 2, tested as h(delta0) != 2^(r-1).
bool exponent_exceeds_two(i64 delta0);

// N = ceil(-delta/24) + (h-1)/2 for prime |delta| > 3 and odd h; the
// matching curve total is N*h.
i64 hayashida_N(i64 delta, i64 h);

struct Rational {
  i64 num;
  i64 den;  // positive
  bool operator==(const Rational&) const = default;
};

// h(delta0) * phi(|delta0|) / (12 * 2^r), reduced. Requires |delta0| > 4.
Rational genus2_lower_bound(i64 delta0);

}  // namespace g4
