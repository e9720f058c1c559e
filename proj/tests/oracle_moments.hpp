#pragma once

// Independent oracle for the moment pipeline: classical Gram-Schmidt on the
// monomial basis under the moment functional <x^i, x^j> = mu_{i+j}. Shares
// only the Rational/Polynomial substrate with the implementation under test;
// the implementation itself goes through Hankel determinants instead.

#include <vector>

#include "oscalg/polynomial.hpp"

namespace oscalg::test {

inline Rational moment_inner(const Polynomial& p, const Polynomial& q,
                             const std::vector<Rational>& mu) {
  Rational acc(0);
  for (int i = 0; i <= p.degree(); ++i) {
    for (int j = 0; j <= q.degree(); ++j) {
      acc += p.coeff(static_cast<std::size_t>(i)) * q.coeff(static_cast<std::size_t>(j)) *
             mu.at(static_cast<std::size_t>(i + j));
    }
  }
  return acc;
}

struct GramSchmidtResult {
  std::vector<Polynomial> monic;   // pi_0 .. pi_count
  std::vector<Rational> norms2;    // <pi_k, pi_k>
  std::vector<Rational> a;         // a_0 .. a_{count-1}
  std::vector<Rational> b2;        // b_0^2 .. b_{count-1}^2
};

inline GramSchmidtResult gram_schmidt_recurrence(const std::vector<Rational>& mu,
                                                 std::size_t count) {
  GramSchmidtResult r;
  for (std::size_t n = 0; n <= count; ++n) {
    std::vector<Rational> mono(n + 1);
    mono[n] = Rational(1);
    Polynomial pi{std::vector<Rational>(mono)};
    for (std::size_t j = 0; j < n; ++j) {
      Rational proj = moment_inner(pi, r.monic[j], mu) / r.norms2[j];
      pi -= proj * r.monic[j];
    }
    r.monic.push_back(pi);
    r.norms2.push_back(moment_inner(pi, pi, mu));
  }
  Polynomial x = Polynomial::variable();
  for (std::size_t n = 0; n < count; ++n) {
    r.a.push_back(moment_inner(x * r.monic[n], r.monic[n], mu) / r.norms2[n]);
    r.b2.push_back(r.norms2[n + 1] / r.norms2[n]);
  }
  return r;
}

}  // namespace oscalg::test
