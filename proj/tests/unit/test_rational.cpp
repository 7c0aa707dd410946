#include "doctest.h"
#include "msregion/rational.hpp"

using namespace msr;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("to_string round trips") {
  CHECK(to_string(Rational(5, 2)) == "5/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(parse_rational(to_string(Rational(-17, 9))) == Rational(-17, 9));
}

TEST_CASE("simplest_between picks the lowest-denominator rational") {
  CHECK(simplest_between(Rational(-1), Rational(1)) == 0);
  CHECK(simplest_between(Rational(1, 3), Rational(2, 3)) == Rational(1, 2));
  CHECK(simplest_between(Rational(31, 10), Rational(33, 10)) == Rational(13, 4));
  CHECK(simplest_between(Rational(-5, 2), Rational(-9, 4)) == Rational(-5, 2));
  CHECK(simplest_between(Rational(-12, 5), Rational(-9, 4)) == Rational(-7, 3));
  Rational s = simplest_between(Rational(141421, 100000), Rational(141422, 100000));
  CHECK(s > Rational(141421, 100000));
  CHECK(s < Rational(141422, 100000));
}

TEST_CASE("floor and exact_root") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(floor(Rational(7, 2)) == 3);
  Rational r;
  CHECK(exact_root(Rational(8, 27), 3, r));
  CHECK(r == Rational(2, 3));
  CHECK_FALSE(exact_root(Rational(2), 2, r));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(from_double(0.375) == Rational(3, 8));
}
