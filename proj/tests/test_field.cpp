#include <stdexcept>

#include "doctest.h"
#include "testkit/properties.hpp"
#include "semiarc/field.hpp"

using namespace semiarc;

TEST_SUITE("field") {

TEST_CASE("axioms hold exhaustively for every order") {
  for (int q : testkit::kOrders) {
    CAPTURE(q);
    const auto o = testkit::field_axioms(q);
    CHECK_MESSAGE(o.ok(), o.summary());
  }
  const auto o16 = testkit::field_axioms(16);
  CHECK_MESSAGE(o16.ok(), o16.summary());
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::of_order(7);
  CHECK(f.add(3, 5) == 1);
  CHECK(f.sub(3, 5) == 5);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.div(1, 3) == 5);
  for (int a = 0; a < 7; ++a) CHECK(f.frobenius(a, 0) == a);
  CHECK(f.format(6) == "6");
  CHECK(f.element(3) + f.element(5) == f.element(1));
  CHECK(f.element(3) / f.element(5) == f.element(2));
}

TEST_CASE("GF(9) uses w^2 = 2w + 1") {
  const Field f = Field::of_order(9);
  const Elem w = f.generator();
  CHECK(w == 3);  // the residue class of x
  CHECK(f.mul(w, w) == f.add(f.mul(2, w), 1));
  CHECK(f.frobenius(w, 1) == f.power(w, 3));
  CHECK(f.format(f.frobenius(w, 1)) == "w^3");
  CHECK(f.parse("w") == w);
  CHECK(f.parse("2") == 2);
  CHECK(f.format(2) == "w^4");
}

TEST_CASE("GF(8) uses w^3 = w^2 + 1") {
  const Field f = Field::of_order(8);
  const Elem w = f.generator();
  const Elem w2 = f.mul(w, w);
  CHECK(f.mul(w2, w) == f.add(w2, 1));
  for (int a = 0; a < 8; ++a) {
    Elem x = a;
    for (int k = 0; k < 3; ++k) x = f.frobenius(x, 1);
    CHECK(x == a);
  }
}

TEST_CASE("custom moduli") {
  const Field f(FieldSpec{2, 2, {1, 1, 1}});
  CHECK(f.q() == 4);
  const Field g(FieldSpec{3, 2, {2, 2, 1}});  // x^2 + 2x + 2, primitive
  CHECK(g.mul(g.generator(), g.generator()) == g.add(g.mul(1, g.generator()), 1));
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(Field(FieldSpec{4, 1, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Field(FieldSpec{2, 2, {1, 0, 1}}), std::invalid_argument);     // (x+1)^2
  CHECK_THROWS_AS(Field(FieldSpec{2, 2, {1, 1, 0, 1}}), std::invalid_argument);  // degree 3
  CHECK_THROWS_AS(Field(FieldSpec{3, 2, {1, 0, 1}}), std::invalid_argument);     // x^2+1: root of order 4
  CHECK_THROWS_AS(Field(FieldSpec{2, 2, {1, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::of_order(32), std::invalid_argument);
}

TEST_CASE("arithmetic errors") {
  const Field f = Field::of_order(9);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(f.log(0), std::domain_error);
  CHECK_THROWS_AS(f.element(3) / f.element(0), std::domain_error);
  const Field g = Field::of_order(3);
  CHECK_THROWS_AS(f.element(1) + g.element(1), std::invalid_argument);
  CHECK_THROWS_AS(f.element(9), std::out_of_range);
  CHECK_THROWS_AS(f.parse("w^8"), std::invalid_argument);
  CHECK_THROWS_AS(f.parse("3"), std::invalid_argument);
  CHECK_THROWS_AS(g.parse("w"), std::invalid_argument);
}

}  // TEST_SUITE
