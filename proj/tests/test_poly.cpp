#include <doctest.h>

#include <stdexcept>

#include "g4/poly.hpp"

using namespace g4;

TEST_SUITE_BEGIN("poly");

TEST_CASE("arithmetic and division") {
  Field F7 = prime_field(7);
  Poly f = Poly::from_ints(F7, {1, 0, 1});   // x^2 + 1
  Poly g = Poly::from_ints(F7, {6, 1});      // x - 1
  CHECK((f + g) == Poly::from_ints(F7, {0, 1, 1}));
  CHECK((f * g).degree() == 3);
  auto [q, r] = (f * g + Poly::from_ints(F7, {3})).divmod(f);
  CHECK(q == g);
  CHECK(r == Poly::from_ints(F7, {3}));
  CHECK_THROWS_AS(f.divmod(Poly(F7)), std::invalid_argument);
  CHECK(f.eval(F7->from_int(2)) == F7->from_int(5));
}

TEST_CASE("gcd and derivative") {
  Field F7 = prime_field(7);
  Poly a = Poly::from_ints(F7, {-1, 0, 1});  // x^2 - 1
  Poly b = Poly::from_ints(F7, {-1, 1});     // x - 1
  CHECK(gcd(a, b) == b.monic());

  Field F3 = prime_field(3);
  Poly c = Poly::from_ints(F3, {1, 1, 0, 1});  // x^3 + x + 1
  CHECK(c.derivative() == Poly::from_ints(F3, {1}));
}

TEST_CASE("reverse and shift") {
  Field F7 = prime_field(7);
  Poly f = Poly::from_ints(F7, {1, 0, 0, 1});  // x^3 + 1
  CHECK(f.reverse_shift(3, F7->zero()) == Poly::from_ints(F7, {1, 0, 0, 1}));

  // x^3 f(1/x + a) against direct expansion for f = x^3 + 2x + 5, a = 3
  Poly g = Poly::from_ints(F7, {5, 2, 0, 1});
  Poly h = g.reverse_shift(3, F7->from_int(3));
  for (u64 i = 1; i < 7; ++i) {
    Elem x = F7->elem_at(i);
    CHECK(h.eval(x) == x.pow(3) * g.eval(x.inv() + F7->from_int(3)));
  }

  Poly lin = g.compose_linear(F7->from_int(2), F7->from_int(3));
  for (u64 i = 0; i < 7; ++i) {
    Elem x = F7->elem_at(i);
    CHECK(lin.eval(x) == g.eval(F7->from_int(2) * x + F7->from_int(3)));
  }
}

TEST_CASE("factor examples") {
  Field F5 = prime_field(5);
  auto fs = factor(Poly::from_ints(F5, {0, -1, 0, 1}));  // x^3 - x
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].first == Poly::from_ints(F5, {0, 1}));
  CHECK(fs[1].first == Poly::from_ints(F5, {1, 1}));  // x + 1
  CHECK(fs[2].first == Poly::from_ints(F5, {4, 1}));  // x - 1
  for (auto& [g, m] : fs) CHECK(m == 1);

  Field F7 = prime_field(7);
  auto irr = factor(Poly::from_ints(F7, {1, 0, 1}));  // x^2 + 1
  REQUIRE(irr.size() == 1);
  CHECK(irr[0].first.degree() == 2);

  auto cubic = factor(Poly::from_ints(F7, {1, 1, 0, 1}));  // x^3 + x + 1
  REQUIRE(cubic.size() == 1);
  CHECK(cubic[0].first.degree() == 3);
}

TEST_CASE("factor with multiplicities and wild part") {
  Field F3 = prime_field(3);
  // (x+1)^3 * (x^2+1) has derivative-killing multiplicity in char 3
  Poly f = Poly::from_ints(F3, {1, 1}) * Poly::from_ints(F3, {1, 1}) *
           Poly::from_ints(F3, {1, 1}) * Poly::from_ints(F3, {1, 0, 1});
  auto fs = factor(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == Poly::from_ints(F3, {1, 1}));
  CHECK(fs[0].second == 3);
  CHECK(fs[1].first.degree() == 2);
  CHECK(fs[1].second == 1);
}

TEST_CASE("factor and re-expand on random inputs") {
  for (u64 p : {7, 101}) {
    Field F = prime_field(p);
    Rng rng(digest_combine(p, 0xabc));
    for (int t = 0; t < 150; ++t) {
      std::vector<i64> c(1 + rng.below(9));
      for (auto& v : c) v = static_cast<i64>(rng.below(p));
      Poly f = Poly::from_ints(F, c);
      if (f.is_zero()) continue;
      Poly prod = Poly::from_ints(F, {1});
      for (auto& [g, m] : factor(f)) {
        CHECK(g.lc().is_one());
        for (int i = 0; i < m; ++i) prod = prod * g;
      }
      CHECK(prod * f.lc() == f);
    }
  }
  Field F27 = extension_field(prime_field(3), 3);
  Rng rng(0x27);
  for (int t = 0; t < 60; ++t) {
    std::vector<Elem> c;
    for (u64 i = 0, n = 1 + rng.below(8); i < n; ++i) c.push_back(F27->elem_at(rng.below(27)));
    Poly f(F27, c);
    if (f.is_zero()) continue;
    Poly prod = Poly::from_ints(F27, {1});
    for (auto& [g, m] : factor(f))
      for (int i = 0; i < m; ++i) prod = prod * g;
    CHECK(prod * f.lc() == f);
  }
}

TEST_CASE("roots in a field") {
  Field F13 = prime_field(13);
  auto r = roots_in_field(Poly::from_ints(F13, {1, 0, 1}), F13);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == F13->from_int(5));
  CHECK(r[1] == F13->from_int(8));

  Field F7 = prime_field(7);
  CHECK(roots_in_field(Poly::from_ints(F7, {1, 0, 1}), F7).empty());

  Field F5 = prime_field(5);
  auto r5 = roots_in_field(Poly::from_ints(F5, {0, -1, 0, 1}), F5);
  REQUIRE(r5.size() == 3);
  CHECK(r5[0] == F5->from_int(0));
  CHECK(r5[1] == F5->from_int(1));
  CHECK(r5[2] == F5->from_int(4));
}

TEST_CASE("roots lift into extensions") {
  Field F7 = prime_field(7);
  Field F49 = extension_field(F7, 2);
  Poly f = Poly::from_ints(F7, {1, 0, 1});  // irreducible over F_7
  auto r = roots_in_field(f, F49);
  REQUIRE(r.size() == 2);
  const Embedding& e = Embedding::get(F7, F49);
  Poly fl = f.lift(e);
  for (const auto& x : r) CHECK(fl.eval(x).is_zero());

  // subfield roots stay roots upstream
  Field F2401 = extension_field(F7, 4);
  auto r4 = roots_in_field(f, F2401);
  CHECK(r4.size() == 2);
  const Embedding& up = Embedding::get(F49, F2401);
  for (const auto& x : r) {
    bool found = false;
    for (const auto& y : r4) found = found || (up.apply(x) == y);
    CHECK(found);
  }
}

TEST_CASE("splitting field degree") {
  Field F7 = prime_field(7);
  // (x^2+1)(x^3+x+1): lcm(2,3) = 6
  Poly f = Poly::from_ints(F7, {1, 0, 1}) * Poly::from_ints(F7, {1, 1, 0, 1});
  Field L = splitting_field(f);
  CHECK(L->degree() == 6);
  CHECK(roots_in_field(f, L).size() == 5);
}

TEST_CASE("separability") {
  Field F7 = prime_field(7);
  CHECK(Poly::from_ints(F7, {1, 1, 0, 1}).is_separable());
  Poly sq = Poly::from_ints(F7, {1, 1}) * Poly::from_ints(F7, {1, 1});
  CHECK(!sq.is_separable());
  Field F3 = prime_field(3);
  CHECK(!Poly::from_ints(F3, {1, 0, 0, 1}).is_separable());  // (x+1)^3
}

TEST_CASE("reduced fractions") {
  Field F7 = prime_field(7);
  auto [n1, d1] = param_ratio_reduce(Poly::from_ints(F7, {-1, 0, 1}), Poly::from_ints(F7, {-1, 1}));
  CHECK(n1 == Poly::from_ints(F7, {1, 1}));
  CHECK(d1 == Poly::from_ints(F7, {1}));

  auto [n2, d2] = param_ratio_reduce(Poly(F7), Poly::from_ints(F7, {0, 1}));
  CHECK(n2.is_zero());
  CHECK(d2 == Poly::from_ints(F7, {1}));

  // denominator normalized monic
  auto [n3, d3] = param_ratio_reduce(Poly::from_ints(F7, {1}), Poly::from_ints(F7, {0, 3}));
  CHECK(d3 == Poly::from_ints(F7, {0, 1}));
  CHECK(n3 == Poly::from_ints(F7, {5}));  // 1/3 = 5 mod 7
}

TEST_CASE("parametric polynomials expand correctly") {
  Field F7 = prime_field(7);
  // (1 + t x)^2 = 1 + 2t x + t^2 x^2
  ParamPoly one = ParamPoly::constant(Poly::from_ints(F7, {1}));
  ParamPoly tx(F7, {Poly(F7), Poly::from_ints(F7, {0, 1})});
  ParamPoly s = one + tx;
  ParamPoly sq = s * s;
  CHECK(sq.degree_x() == 2);
  CHECK(sq.coeff_x(0) == Poly::from_ints(F7, {1}));
  CHECK(sq.coeff_x(1) == Poly::from_ints(F7, {0, 2}));
  CHECK(sq.coeff_x(2) == Poly::from_ints(F7, {0, 0, 1}));
  CHECK((sq - sq).degree_x() == -1);
  CHECK(sq.scale(Poly::from_ints(F7, {0, 1})).coeff_x(0) == Poly::from_ints(F7, {0, 1}));
}

TEST_SUITE_END();
