#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscalg/polynomial.hpp"

using oscalg::Polynomial;
using oscalg::Rational;

namespace {
Polynomial poly(std::vector<Rational> coeffs) { return Polynomial(std::move(coeffs)); }
}  // namespace

TEST_CASE("evaluation") {
  Polynomial p = poly({2, 3, 1});  // n^2 + 3n + 2
  CHECK(p.eval(3) == Rational(20));
  CHECK(Polynomial().eval(17) == Rational(0));
  CHECK(poly({1, 2, 1}).eval(0) == Rational(1));
  CHECK(poly({Rational(1, 2), Rational(-1, 3)}).eval(Rational(3, 2)) == Rational(0));
}

TEST_CASE("canonical form strips trailing zeros; zero degree sentinel") {
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  CHECK(Polynomial().degree() == -1);
  CHECK(poly({0}).degree() == -1);
  CHECK(poly({0}) == Polynomial());
  CHECK(Polynomial(Rational(0)).is_zero());
  CHECK(poly({5}).degree() == 0);
}

TEST_CASE("arithmetic") {
  Polynomial n = Polynomial::variable();
  CHECK((n + Polynomial(1)) * (n - Polynomial(1)) == poly({-1, 0, 1}));
  CHECK(poly({1, 1}) - poly({1, 1}) == Polynomial());
  CHECK(Rational(2) * poly({1, 1}) == poly({2, 2}));
  CHECK((-poly({1, -2})) == poly({-1, 2}));
  CHECK((n * n).degree() == 2);
  CHECK((poly({1, 1}) * Polynomial()).is_zero());
}

TEST_CASE("argument shift expands exactly") {
  Polynomial n2 = poly({0, 0, 1});
  CHECK(n2.shifted_arg(1) == poly({1, 2, 1}));
  CHECK(n2.shifted_arg(-1) == poly({1, -2, 1}));
  CHECK(poly({3}).shifted_arg(5) == poly({3}));
  // shift by d then -d is the identity
  Polynomial p = poly({Rational(1, 2), 3, Rational(-2, 3), 1});
  CHECK(p.shifted_arg(4).shifted_arg(-4) == p);
}

TEST_CASE("printing") {
  CHECK(poly({2, 3, 1}).to_string() == "n^2 + 3*n + 2");
  CHECK(Polynomial().to_string() == "0");
  CHECK(poly({1, -1}).to_string() == "-n + 1");
  CHECK(poly({0, Rational(1, 2)}).to_string() == "1/2*n");
  CHECK(poly({0, 0, -1}).to_string() == "-n^2");
}
