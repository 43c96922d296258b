#include <doctest.h>

#include <set>

#include "defcol/rational.hpp"

using defcol::Rational;

TEST_SUITE("rational") {

TEST_CASE("normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
}

TEST_CASE("arithmetic stays exact") {
  // 1 - 5*(1/5) = 0, the equality the charge proofs lean on
  CHECK((Rational(1) - Rational(5) * Rational(1, 5)).is_zero());
  CHECK(Rational(1, 9) + Rational(1, 3) + Rational(5, 9) + Rational(1) == Rational(2));
  CHECK(Rational(1) - Rational(5) * Rational(1, 2) == Rational(-3, 2));
  CHECK(Rational(-1) + Rational(2, 3) == Rational(-1, 3));
  CHECK(Rational(1) - Rational(5) * Rational(2, 9) == Rational(-1, 9));
  CHECK(Rational(20) * Rational(-1, 3) + Rational(12) * Rational(-1, 9) == Rational(-8));
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(2, 5));
  CHECK(Rational(-3, 2) < Rational(-1));
  CHECK(Rational(1, 2) > Rational(0));
  std::set<Rational> charges{Rational(1, 9), Rational(1, 6), Rational(1, 5)};
  CHECK(*charges.begin() == Rational(1, 9));
}

TEST_CASE("division guards") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(Rational(5, 9) / Rational(5) == Rational(1, 9));
}

TEST_CASE("string form") {
  CHECK(Rational(-8).str() == "-8");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(10, 5).str() == "2");
}

}  // TEST_SUITE
