#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscalg/expr.hpp"
#include "testutil.hpp"

using namespace oscalg;
using test::Rng;

namespace {
Polynomial poly(std::vector<Rational> coeffs) { return Polynomial(std::move(coeffs)); }
}  // namespace

TEST_CASE("expansion with parameter substitution") {
  Bindings alpha0{{"alpha", Rational(0)}};
  CHECK(parse_coeff_expr("(n+1)*(n+alpha+1)", alpha0) == poly({1, 2, 1}));
  CHECK(parse_coeff_expr("0") == Polynomial());
  CHECK(parse_coeff_expr("n^2 + 1/2*n") == poly({0, Rational(1, 2), 1}));

  Bindings alpha_half{{"alpha", Rational(1, 2)}};
  CHECK(parse_coeff_expr("(n+1)*(n+alpha+1)", alpha_half) ==
        poly({Rational(3, 2), Rational(5, 2), 1}));
}

TEST_CASE("grammar corners") {
  CHECK(parse_coeff_expr("n^0") == poly({1}));
  CHECK(parse_coeff_expr("2^3") == poly({8}));
  CHECK(parse_coeff_expr("-n + 1") == poly({1, -1}));
  CHECK(parse_coeff_expr("((n))") == Polynomial::variable());
  CHECK(parse_coeff_expr(" 3/2 * n ") == poly({0, Rational(3, 2)}));
  CHECK(parse_coeff_expr("n - n") == Polynomial());
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("n +"), ParseError);
  CHECK_THROWS_AS(parse_expr("(n+1"), ParseError);
  CHECK_THROWS_AS(parse_expr("n n"), ParseError);
  CHECK_THROWS_AS(parse_expr("n / 2"), ParseError);

  try {
    parse_expr("n + $");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("exponent must be a natural literal") {
  CHECK_THROWS_AS(parse_expr("n^alpha"), ParseError);
  CHECK_THROWS_AS(parse_expr("n^(2)"), ParseError);
  CHECK_THROWS_AS(parse_expr("n^-1"), ParseError);
  CHECK_THROWS_AS(parse_expr("n^1/2"), ParseError);
}

TEST_CASE("unbound identifiers are rejected at lowering") {
  Expr tree = parse_expr("n + alpha");
  CHECK_THROWS_AS(lower_to_polynomial(tree, {}), ParseError);
  CHECK_THROWS_AS(parse_coeff_expr("beta*n", {{"alpha", Rational(1)}}), ParseError);
}

namespace {

// Random expression trees for the parser-soundness property.
Expr rand_tree(Rng& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 6);
  int choice = pick(rng);
  Expr e;
  switch (choice) {
    case 0:
      e.kind = Expr::Kind::literal;
      e.value = test::rand_rational(rng, 6, 3);
      return e;
    case 1:
      e.kind = Expr::Kind::index_var;
      return e;
    case 2:
      e.kind = Expr::Kind::parameter;
      e.name = "alpha";
      return e;
    case 3:
    case 4:
    case 5: {
      e.kind = choice == 3 ? Expr::Kind::add
                           : (choice == 4 ? Expr::Kind::sub : Expr::Kind::mul);
      e.kids.push_back(rand_tree(rng, depth - 1));
      e.kids.push_back(rand_tree(rng, depth - 1));
      return e;
    }
    default: {
      e.kind = Expr::Kind::pow;
      std::uniform_int_distribution<unsigned> ex(0, 3);
      e.exponent = ex(rng);
      e.kids.push_back(rand_tree(rng, depth - 1));
      return e;
    }
  }
}

}  // namespace

TEST_CASE("property: lowering agrees with direct interpretation") {
  Rng rng(2024);
  Bindings bindings{{"alpha", Rational(5, 3)}};
  for (int trial = 0; trial < 60; ++trial) {
    Expr tree = rand_tree(rng, 4);
    Polynomial lowered = lower_to_polynomial(tree, bindings);
    for (long n = 0; n <= 20; ++n) {
      CHECK(lowered.eval(Rational(n)) == interpret(tree, Rational(n), bindings));
    }
  }
}

TEST_CASE("property: printed polynomials re-parse to themselves") {
  Rng rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial p = test::rand_polynomial(rng, 4);
    CHECK(parse_coeff_expr(p.to_string()) == p);
  }
}
