#include <doctest.h>

#include <stdexcept>

#include "g4/classgroup.hpp"

using namespace g4;

TEST_SUITE_BEGIN("classgroup");

TEST_CASE("class numbers by form enumeration") {
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-4) == 1);
  CHECK(class_number(-19) == 1);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-43) == 1);
  CHECK(class_number(-131) == 5);
  CHECK(class_number(-16) == 1);   // (2,0,2) is imprimitive
  CHECK(class_number(-12) == 1);
  CHECK(class_number(-5460) == 16);
  CHECK_THROWS_AS(class_number(-5), std::invalid_argument);
  CHECK_THROWS_AS(class_number(21), std::invalid_argument);
}

TEST_CASE("reduced form invariants") {
  for (i64 d : {-23, -131, -400, -5460}) {
    for (const auto& f : reduced_forms(d)) {
      CHECK(f.b * f.b - 4 * f.a * f.c == d);
      CHECK(f.a > 0);
      CHECK(-f.a < f.b);
      CHECK(f.b <= f.a);
      CHECK(f.a <= f.c);
      if (f.a == f.c) CHECK(f.b >= 0);
    }
  }
}

TEST_CASE("kronecker class numbers") {
  CHECK(kronecker_class_number(-19) == 1);
  CHECK(kronecker_class_number(-16) == 2);   // h(-16) + h(-4)
  CHECK(kronecker_class_number(-12) == 2);   // h(-12) + h(-3)
  CHECK(kronecker_class_number(-23) == 3);
  CHECK(kronecker_class_number(-36) == 3);   // h(-36) + h(-4) = 2 + 1
  for (i64 d : {-20, -24, -40, -52, -84}) CHECK(kronecker_class_number(d) >= class_number(d));
}

TEST_CASE("discriminant decomposition") {
  Discriminant d = analyze_discriminant(-12);
  CHECK(d.delta0 == -3);
  CHECK(d.conductor == 2);
  CHECK(d.r == 1);

  d = analyze_discriminant(-16);
  CHECK(d.delta0 == -4);
  CHECK(d.conductor == 2);

  d = analyze_discriminant(-131);
  CHECK(d.delta0 == -131);
  CHECK(d.conductor == 1);
  CHECK(d.r == 1);

  d = analyze_discriminant(-5460);
  CHECK(d.delta0 == -5460);  // = -4*3*5*7*13, already fundamental
  CHECK(d.conductor == 1);
  CHECK(d.r == 5);

  CHECK_THROWS_AS(analyze_discriminant(-5), std::invalid_argument);
}

TEST_CASE("class group exponent test") {
  CHECK(exponent_exceeds_two(-23));
  CHECK(exponent_exceeds_two(-131));
  CHECK(!exponent_exceeds_two(-19));
  CHECK(!exponent_exceeds_two(-5460));
  CHECK(!exponent_exceeds_two(-3));
  CHECK_THROWS_AS(exponent_exceeds_two(-12), std::invalid_argument);
}

TEST_CASE("hayashida count") {
  CHECK(hayashida_N(-19, 1) == 1);
  CHECK(hayashida_N(-43, 1) == 2);
  CHECK(hayashida_N(-131, 5) == 8);
  CHECK_THROWS_AS(hayashida_N(-21, 1), std::invalid_argument);
  CHECK_THROWS_AS(hayashida_N(-19, 2), std::invalid_argument);
}

TEST_CASE("genus-2 lower bound") {
  CHECK(genus2_lower_bound(-19) == Rational{3, 4});
  CHECK(genus2_lower_bound(-23) == Rational{11, 4});
  CHECK(genus2_lower_bound(-131) == Rational{325, 12});
  CHECK_THROWS_AS(genus2_lower_bound(-3), std::invalid_argument);
  CHECK_THROWS_AS(genus2_lower_bound(-4), std::invalid_argument);
}

TEST_SUITE_END();
