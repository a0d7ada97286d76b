#include <doctest.h>

#include <set>
#include <stdexcept>

#include "g4/field.hpp"
#include "g4/rng.hpp"

using namespace g4;

TEST_SUITE_BEGIN("field");

TEST_CASE("prime field arithmetic") {
  Field F7 = prime_field(7);
  CHECK(F7->p() == 7);
  CHECK(F7->degree() == 1);
  CHECK(F7->order() == 7);

  Elem a = F7->from_int(3), b = F7->from_int(5);
  CHECK((a * b).is_one());
  CHECK(a.inv() == b);
  CHECK(F7->from_int(4) + F7->from_int(5) == F7->from_int(2));
  CHECK(F7->from_int(2) - F7->from_int(5) == F7->from_int(4));
  CHECK(-F7->from_int(3) == F7->from_int(4));
  CHECK(F7->from_int(-1) == F7->from_int(6));
  CHECK(F7->from_int(3).pow(6).is_one());

  CHECK_THROWS_AS(F7->zero().inv(), std::invalid_argument);
  Field F5 = prime_field(5);
  CHECK_THROWS_AS((void)(F7->one() + F5->one()), std::invalid_argument);
}

TEST_CASE("field construction guards") {
  CHECK_THROWS_AS(prime_field(2), std::invalid_argument);
  CHECK_THROWS_AS(prime_field(9), std::invalid_argument);
  CHECK_THROWS_AS(prime_field(u64{1} << 21), std::invalid_argument);
  Field F3 = prime_field(3);
  CHECK_THROWS_AS(extension_field(F3, 0), std::invalid_argument);
  CHECK_THROWS_AS(extension_field(F3, 100), std::invalid_argument);
  CHECK(prime_field(7) == prime_field(7));  // interned
}

TEST_CASE("quadratic character and square roots in F_7") {
  Field F7 = prime_field(7);
  CHECK(F7->from_int(2).chi() == 1);
  CHECK(F7->from_int(3).chi() == -1);
  CHECK(F7->zero().chi() == 0);

  auto r = F7->from_int(2).sqrt();
  REQUIRE(r.has_value());
  CHECK(*r == F7->from_int(3));  // the other root is 4
  CHECK(!F7->from_int(3).sqrt().has_value());
  CHECK(F7->least_nonresidue() == F7->from_int(3));
  CHECK(F7->primitive_root() == F7->from_int(3));
}

TEST_CASE("chosen moduli are the lex-least irreducibles") {
  Field F9 = extension_field(prime_field(3), 2);
  CHECK(F9->modulus() == std::vector<u64>{1, 0, 1});  // x^2 + 1
  Field F49 = extension_field(prime_field(7), 2);
  CHECK(F49->modulus() == std::vector<u64>{1, 0, 1});
  Field F27 = extension_field(prime_field(3), 3);
  CHECK(F27->modulus() == std::vector<u64>{1, 0, 2, 1});  // x^3 + 2x^2 + 1
}

TEST_CASE("extension arithmetic in F_9") {
  Field F9 = extension_field(prime_field(3), 2);
  CHECK(F9->order() == 9);
  Elem g = F9->gen();
  CHECK(g * g == F9->from_int(-1));
  CHECK(g.pow(4).is_one());
  CHECK(g.pow(2) == F9->from_int(-1));  // g has order 4
  CHECK(F9->primitive_root() == F9->element({1, 1}));  // 1 + g has order 8
  CHECK((g.inv() * g).is_one());
  // Frobenius over F_3 is the nontrivial automorphism
  CHECK(g.frobenius(prime_field(3)) == -g);
  CHECK(g.frobenius(prime_field(3), 2) == g);
  CHECK(F9->from_int(2).frobenius(prime_field(3)) == F9->from_int(2));
}

TEST_CASE("element enumeration matches lex order") {
  Field F9 = extension_field(prime_field(3), 2);
  CHECK(F9->elem_at(0).is_zero());
  CHECK(F9->elem_at(1) == F9->gen());            // [0,1]
  CHECK(F9->elem_at(3) == F9->one());            // [1,0]
  for (u64 i = 0; i < 9; ++i) {
    CHECK(F9->elem_at(i).lex_rank() == i);
    if (i) CHECK(F9->elem_at(i - 1).lex_less(F9->elem_at(i)));
  }
  CHECK_THROWS_AS(F9->elem_at(9), std::invalid_argument);
}

TEST_CASE("character sums vanish") {
  for (u64 q : {7, 11, 1009}) {
    Field F = prime_field(q);
    i64 s = 0;
    for (u64 i = 0; i < q; ++i) s += F->elem_at(i).chi();
    CHECK(s == 0);
  }
  Field F27 = extension_field(prime_field(3), 3);
  i64 s = 0;
  for (u64 i = 0; i < 27; ++i) s += F27->elem_at(i).chi();
  CHECK(s == 0);
}

TEST_CASE("sqrt roundtrip over F_25") {
  Field F25 = extension_field(prime_field(5), 2);
  int squares = 0;
  for (u64 i = 1; i < 25; ++i) {
    Elem x = F25->elem_at(i);
    auto r = x.sqrt();
    if (x.chi() == 1) {
      ++squares;
      REQUIRE(r.has_value());
      CHECK(r->square() == x);
      CHECK(r->lex_less(-*r));  // canonical pick
    } else {
      CHECK(!r.has_value());
    }
  }
  CHECK(squares == 12);
}

TEST_CASE("sqrt in a large prime field") {
  Field F = prime_field(1000003);
  Elem x = F->from_int(777);
  Elem sq = x.square();
  auto r = sq.sqrt();
  REQUIRE(r.has_value());
  CHECK(r->square() == sq);
}

TEST_CASE("chi by exponent in a big extension") {
  // order 3^16 > 2^22 forces the pow path
  Field F = extension_field(prime_field(3), 16);
  Elem g = F->gen();
  CHECK(g.square().chi() == 1);
  i64 seen = 0;
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    std::vector<u64> c(16);
    for (auto& v : c) v = rng.below(3);
    Elem x = F->element(c);
    if (x.is_zero()) continue;
    int ch = x.chi();
    CHECK((ch == 1 || ch == -1));
    CHECK(x.square().chi() == 1);
    seen += ch;
  }
  (void)seen;
}

TEST_CASE("embeddings compose and descend") {
  Field F3 = prime_field(3);
  Field F9 = extension_field(F3, 2);
  Field F729 = extension_field(F3, 6);

  const Embedding& e39 = Embedding::get(F3, F9);
  const Embedding& e9_729 = Embedding::get(F9, F729);
  const Embedding& e3_729 = Embedding::get(F3, F729);

  for (u64 i = 0; i < 3; ++i) {
    Elem x = F3->elem_at(i);
    CHECK(e3_729.apply(x) == e9_729.apply(e39.apply(x)));
  }

  Rng rng(7);
  for (int t = 0; t < 25; ++t) {
    Elem a = F9->elem_at(rng.below(9));
    Elem b = F9->elem_at(rng.below(9));
    CHECK(e9_729.apply(a + b) == e9_729.apply(a) + e9_729.apply(b));
    CHECK(e9_729.apply(a * b) == e9_729.apply(a) * e9_729.apply(b));
    auto back = e9_729.descend(e9_729.apply(a));
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK(e9_729.apply(F9->one()).is_one());

  // an element outside the subfield has no preimage
  CHECK(!e9_729.descend(F729->gen()).has_value());

  // identity embedding
  const Embedding& id = Embedding::get(F9, F9);
  CHECK(id.apply(F9->gen()) == F9->gen());
}

TEST_CASE("embedding image is the fixed field of the right power of Frobenius") {
  Field F5 = prime_field(5);
  Field F25 = extension_field(F5, 2);
  Field F625 = extension_field(F5, 4);
  const Embedding& e = Embedding::get(F25, F625);
  std::set<std::vector<u64>> image;
  for (u64 i = 0; i < 25; ++i) image.insert(e.apply(F25->elem_at(i)).coeffs());
  CHECK(image.size() == 25);
  int fixed = 0;
  for (u64 i = 0; i < 625; ++i) {
    Elem x = F625->elem_at(i);
    if (x.frobenius(F25) == x) {
      ++fixed;
      CHECK(image.count(x.coeffs()) == 1);
      CHECK(e.descend(x).has_value());
    }
  }
  CHECK(fixed == 25);
}

TEST_CASE("embedding is deterministic across the registry") {
  Field F3 = prime_field(3);
  Field F81 = extension_field(F3, 4);
  Field F9 = extension_field(F3, 2);
  const Embedding& e1 = Embedding::get(F9, F81);
  const Embedding& e2 = Embedding::get(F9, F81);
  CHECK(&e1 == &e2);
  CHECK(e1.apply(F9->gen()) == e2.apply(F9->gen()));
}

TEST_SUITE_END();
