#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscalg/rational.hpp"

using oscalg::Error;
using oscalg::Integer;
using oscalg::ParseError;
using oscalg::Rational;

TEST_CASE("construction canonicalizes to lowest terms, positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) >= Rational(1));
  CHECK(Rational(5).sign() == 1);
  CHECK(Rational(-5, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(-8, 2).to_string() == "-4");
  CHECK(Rational(0).to_string() == "0");

  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("exact square roots") {
  REQUIRE(Rational(4, 9).sqrt_exact());
  CHECK(*Rational(4, 9).sqrt_exact() == Rational(2, 3));
  CHECK(*Rational(0).sqrt_exact() == Rational(0));
  CHECK(*Rational(16).sqrt_exact() == Rational(4));
  CHECK_FALSE(Rational(2).sqrt_exact());
  CHECK_FALSE(Rational(1, 2).sqrt_exact());
  CHECK_FALSE(Rational(-4).sqrt_exact());
}

TEST_CASE("ceil and abs") {
  CHECK(Rational(7, 2).ceil() == Integer(4));
  CHECK(Rational(-7, 2).ceil() == Integer(-3));
  CHECK(Rational(3).ceil() == Integer(3));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
}

TEST_CASE("big values stay exact") {
  Rational big(Integer("123456789012345678901234567890"), Integer(7));
  CHECK(big * Rational(7) == Rational(Integer("123456789012345678901234567890")));
}
