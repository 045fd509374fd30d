#include <doctest.h>

#include "subnorm/errors.hpp"
#include "subnorm/field.hpp"

using namespace subnorm;

TEST_CASE("small extension fields") {
  FiniteField f4(4);
  CHECK(f4.characteristic() == 2);
  CHECK(f4.degree() == 2);
  CHECK(f4.mul(2, 2) == 3);  // x^2 = x + 1
  CHECK(f4.to_string(3) == "x+1");

  FiniteField f9(9);
  CHECK(f9.mul(3, 3) == f9.neg(1));  // x^2 = -1
  CHECK(f9.neg(1) == 2);
  CHECK(f9.to_string(5) == "x+2");

  FiniteField f8(8);
  CHECK(f8.pow(2, 3) == f8.add(2, 1));  // x^3 = x + 1
  FiniteField f16(16);
  CHECK(f16.pow(2, 4) == f16.add(2, 1));
  CHECK(f16.to_string(6) == "x^2+x");
}

TEST_CASE("field axioms") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    CAPTURE(q);
    FiniteField f(q);
    for (FiniteField::Element a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.frobenius(a) == f.pow(a, f.characteristic()));
      CHECK(f.from_coefficients(f.coefficients(a)) == a);
      for (FiniteField::Element b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (FiniteField::Element c = 0; c < q; c += 3) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        }
      }
    }
    CHECK(f.multiplicative_order(f.primitive()) == q - 1);
    for (FiniteField::Element a = 1; a < f.primitive(); ++a) CHECK(f.multiplicative_order(a) < q - 1);
    CHECK_THROWS_AS(f.inv(0), DomainError);
    CHECK_THROWS_AS(f.multiplicative_order(0), DomainError);
  }
}

TEST_CASE("unsupported orders and bad coefficients") {
  for (std::uint32_t q : {0u, 1u, 6u, 10u, 17u, 25u}) CHECK_THROWS_AS(FiniteField{q}, DomainError);
  FiniteField f9(9);
  CHECK_THROWS_AS(f9.from_coefficients({3}), DomainError);
  CHECK_THROWS_AS(f9.from_coefficients({1, 1, 1}), DomainError);
  CHECK_THROWS_AS(f9.inv(9), DomainError);
}
