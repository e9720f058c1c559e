#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "testutil.hpp"

using namespace oscalg;
using test::Rng;

namespace {

EpSeq spike(const Rational& v) {  // v at n = 0, zero afterwards
  return EpSeq({v}, Polynomial());
}

Polynomial poly(std::vector<Rational> coeffs) { return Polynomial(std::move(coeffs)); }

}  // namespace

TEST_CASE("value lookup crosses the prefix/tail boundary") {
  EpSeq s({Rational(1)}, Polynomial());
  CHECK(s.at(0) == Rational(1));
  CHECK(s.at(5) == Rational(0));
  EpSeq t(poly({1, 2}));  // 2n + 1
  CHECK(t.at(4) == Rational(9));
}

TEST_CASE("canonical form absorbs prefix values that match the tail") {
  EpSeq s({Rational(1), Rational(3)}, poly({1, 2}));  // both match 2n+1
  CHECK(s.prefix_size() == 0);
  EpSeq kept({Rational(5), Rational(3)}, poly({1, 2}));  // 5 != 1 at n=0
  CHECK(kept.prefix_size() == 1);
  CHECK(kept.at(0) == Rational(5));
  CHECK(kept.at(1) == Rational(3));
}

TEST_CASE("forward difference") {
  CHECK(EpSeq(poly({1, 2})).difference() == EpSeq(poly({2})));
  CHECK(spike(Rational(1)).difference() == spike(Rational(-1)));
  CHECK(EpSeq::constant(Rational(7)).difference().is_zero());
}

TEST_CASE("constancy detection") {
  CHECK(*EpSeq(poly({2})).as_constant() == Rational(2));
  CHECK_FALSE(spike(Rational(-1)).as_constant());
  CHECK_FALSE(EpSeq(poly({1, 2})).as_constant());
  CHECK(*EpSeq().as_constant() == Rational(0));
}

TEST_CASE("argument offsets in both directions") {
  EpSeq s({Rational(9)}, poly({0, 0, 1}));  // 9, 1, 4, 9, 16, ...
  EpSeq fwd = s.at_offset(2);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(fwd.at(n) == s.at(n + 2));
  EpSeq back = s.at_offset(-2);
  for (std::size_t n = 2; n <= 10; ++n) CHECK(back.at(n) == s.at(n - 2));
  // below the shift the tail polynomial extends: (n-2)^2 at n = 0, 1
  CHECK(back.at(0) == Rational(4));
  CHECK(back.at(1) == Rational(1));
}

TEST_CASE("linear dependence: duplicates, identities, independence") {
  EpSeq n(Polynomial::variable());
  EpSeq one = EpSeq::constant(Rational(1));
  EpSeq n1(poly({1, 1}));

  std::array dup{n, n};
  auto c = linear_dependence(dup);
  REQUIRE(c);
  CHECK(*c == std::vector<Rational>{Rational(1), Rational(-1)});

  std::array id{n, one, n1};
  c = linear_dependence(id);
  REQUIRE(c);
  CHECK(*c == std::vector<Rational>{Rational(1), Rational(1), Rational(-1)});

  std::array indep{spike(Rational(1)), one};
  CHECK_FALSE(linear_dependence(indep));
}

TEST_CASE("property: canonicalization never changes values") {
  Rng rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial tail = test::rand_polynomial(rng);
    std::vector<Rational> pre;
    for (std::size_t n = 0; n < 4; ++n) {
      // half the entries agree with the tail, so canonicalization has work to do
      pre.push_back(trial % 2 == 0 ? tail.eval(Rational(static_cast<long>(n)))
                                   : test::rand_rational(rng));
    }
    EpSeq s(pre, tail);
    for (std::size_t n = 0; n < pre.size(); ++n) CHECK(s.at(n) == pre[n]);
    for (std::size_t n = pre.size(); n <= 50; ++n) {
      CHECK(s.at(n) == tail.eval(Rational(static_cast<long>(n))));
    }
  }
}

TEST_CASE("property: difference agrees with shifted values") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    EpSeq s = test::rand_epseq(rng);
    EpSeq d = s.difference();
    for (std::size_t n = 0; n <= 50; ++n) {
      CHECK(d.at(n) == s.at(n + 1) - s.at(n));
    }
  }
}

TEST_CASE("property: tail degree drops by exactly one per difference") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    EpSeq s = test::rand_epseq(rng, 2, 4);
    if (s.tail().degree() < 1) continue;
    CHECK(s.difference().tail().degree() == s.tail().degree() - 1);
  }
}

TEST_CASE("property: d-fold difference of a degree-d tail is d! times the lead") {
  Rng rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial tail = test::rand_polynomial(rng, 5);
    int d = tail.degree();
    if (d < 0) continue;
    EpSeq s(tail);
    for (int j = 0; j < d; ++j) s = s.difference();
    Rational factorial(1);
    for (int k = 2; k <= d; ++k) factorial *= Rational(k);
    REQUIRE(s.as_constant());
    CHECK(*s.as_constant() == factorial * tail.leading());
    CHECK(s.difference().is_zero());
  }
}

TEST_CASE("property: linear dependence coefficients annihilate pointwise") {
  Rng rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<EpSeq> seqs;
    for (int i = 0; i < 3; ++i) seqs.push_back(test::rand_epseq(rng));
    // plant a relation: the sum of the first three
    seqs.push_back(seqs[0] + seqs[1] + seqs[2]);

    auto c = linear_dependence(seqs);
    REQUIRE(c);
    std::size_t n0 = 0;
    int deg = 0;
    bool nonzero = false;
    for (const auto& s : seqs) {
      n0 = std::max(n0, s.prefix_size());
      deg = std::max(deg, s.tail().degree());
    }
    for (const auto& x : *c) nonzero = nonzero || !x.is_zero();
    CHECK(nonzero);
    for (std::size_t n = 0; n <= n0 + static_cast<std::size_t>(deg) + 2; ++n) {
      Rational sum(0);
      for (std::size_t i = 0; i < seqs.size(); ++i) sum += (*c)[i] * seqs[i].at(n);
      CHECK(sum == Rational(0));
    }
  }
}

TEST_CASE("pointwise arithmetic") {
  EpSeq a({Rational(2)}, poly({0, 1}));
  EpSeq b(poly({1}));
  CHECK((a + b).at(0) == Rational(3));
  CHECK((a * a).at(0) == Rational(4));
  CHECK((a * a).at(3) == Rational(9));
  CHECK((a - a).is_zero());
  CHECK((Rational(-2) * a).at(0) == Rational(-4));
}
