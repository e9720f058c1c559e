#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_moments.hpp"
#include "oscalg/moments.hpp"

using namespace oscalg;

namespace {

std::vector<Rational> factorial_moments(std::size_t upto) {
  std::vector<Rational> mu{Rational(1)};
  for (std::size_t k = 1; k <= upto; ++k) {
    mu.push_back(mu.back() * Rational(static_cast<long>(k)));
  }
  return mu;
}

// Central moments of the normal law with variance 1/2: mu_{2k} = (2k-1)!!/2^k.
std::vector<Rational> gaussian_half_moments(std::size_t upto) {
  std::vector<Rational> mu{Rational(1)};
  for (std::size_t k = 1; k <= upto; ++k) {
    if (k % 2 == 1) {
      mu.push_back(Rational(0));
    } else {
      mu.push_back(mu[k - 2] * Rational(static_cast<long>(k - 1), 2));
    }
  }
  return mu;
}

std::vector<Rational> rising_factorial_moments(const Rational& alpha, std::size_t upto) {
  std::vector<Rational> mu{Rational(1)};
  for (std::size_t k = 1; k <= upto; ++k) {
    mu.push_back(mu.back() * (alpha + Rational(static_cast<long>(k))));
  }
  return mu;
}

}  // namespace

TEST_CASE("factorial moments give the Laguerre alpha=0 coefficients") {
  // frozen from the Gram-Schmidt oracle below (and from a_n = 2n+1, b_n^2 = (n+1)^2)
  MomentSequence m(factorial_moments(8));
  RecurrenceTable t = moments_to_recurrence(m, 2);
  CHECK(t.a == std::vector<Rational>{Rational(1), Rational(3)});
  CHECK(t.b2 == std::vector<Rational>{Rational(1), Rational(4)});

  auto oracle = test::gram_schmidt_recurrence(m.values(), 2);
  CHECK(t.a == oracle.a);
  CHECK(t.b2 == oracle.b2);
}

TEST_CASE("gaussian variance-1/2 moments give the Hermite coefficients") {
  MomentSequence m(gaussian_half_moments(6));
  RecurrenceTable t = moments_to_recurrence(m, 2);
  CHECK(t.a == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(t.b2 == std::vector<Rational>{Rational(1, 2), Rational(1)});

  MomentSequence longer(gaussian_half_moments(8));
  RecurrenceTable t3 = moments_to_recurrence(longer, 3);
  CHECK(t3.b2 == std::vector<Rational>{Rational(1, 2), Rational(1), Rational(3, 2)});
  auto oracle = test::gram_schmidt_recurrence(longer.values(), 3);
  CHECK(t3.a == oracle.a);
  CHECK(t3.b2 == oracle.b2);
}

TEST_CASE("uniform [0,1] moments match the oracle") {
  std::vector<Rational> mu;
  for (long k = 0; k <= 8; ++k) mu.push_back(Rational(1, k + 1));
  MomentSequence m(mu);
  RecurrenceTable t = moments_to_recurrence(m, 4);
  auto oracle = test::gram_schmidt_recurrence(mu, 4);
  CHECK(t.a == oracle.a);
  CHECK(t.b2 == oracle.b2);
  CHECK(t.a[0] == Rational(1, 2));  // shifted Legendre diagonal
}

TEST_CASE("degenerate and malformed moment sequences are rejected") {
  CHECK_THROWS_AS(MomentSequence({Rational(1), Rational(0), Rational(0)}), SpecError);
  CHECK_THROWS_AS(MomentSequence({Rational(2), Rational(0)}), SpecError);  // mu_0 != 1
  CHECK_THROWS_AS(MomentSequence({}), SpecError);

  MomentSequence ok(factorial_moments(4));
  CHECK_THROWS_AS(moments_to_recurrence(ok, 3), SpecError);  // needs mu_6
  CHECK_THROWS_AS(moments_to_recurrence(ok, 0), SpecError);
}

TEST_CASE("orthonormality contract via the monic system") {
  // With pi_{k+1} = (x - a_k) pi_k - b2_{k-1} pi_{k-1}, the recurrence output
  // is correct iff <pi_i, pi_j> = 0 for i != j and <pi_i, pi_i> agrees with
  // the product of the b2's. Everything here is exact.
  std::vector<Rational> mu = factorial_moments(10);
  MomentSequence m(mu);
  RecurrenceTable t = moments_to_recurrence(m, 5);

  std::vector<Polynomial> pi{Polynomial(1)};
  Polynomial x = Polynomial::variable();
  for (std::size_t k = 0; k < 4; ++k) {
    Polynomial next = (x - Polynomial(t.a[k])) * pi[k];
    if (k > 0) next -= t.b2[k - 1] * pi[k - 1];
    pi.push_back(next);
  }
  Rational norm2(1);
  for (std::size_t i = 0; i <= 4; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      CHECK(test::moment_inner(pi[i], pi[j], mu) == Rational(0));
    }
    CHECK(test::moment_inner(pi[i], pi[i], mu) == norm2);
    if (i < 4) norm2 *= t.b2[i];
  }
}

TEST_CASE("round-trip with the Laguerre family") {
  for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(2)}) {
    MomentSequence m(rising_factorial_moments(alpha, 8));
    RecurrenceTable t = moments_to_recurrence(m, 4);
    RecurrenceSpec family = builtin_family(Family::laguerre, {{"alpha", alpha}});
    for (std::size_t n = 0; n < 4; ++n) {
      CHECK(t.a[n] == family.a.at(n));
      CHECK(t.b2[n] == family.b2.at(n));
    }
  }
}

TEST_CASE("prefix-only spec from moments") {
  MomentSequence m(factorial_moments(8));
  RecurrenceSpec s = spec_from_moments(m, 4, "factorials");
  CHECK_FALSE(s.symbolic());
  CHECK(*s.horizon == 4);
  CHECK(s.b2.at(2) == Rational(9));
  CHECK(s.a.at(3) == Rational(7));
  CHECK(validate(s).valid);
  CHECK_THROWS_AS(require_symbolic(s, "test"), SpecError);
}
