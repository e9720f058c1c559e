#pragma once

#include <random>
#include <vector>

#include "oscalg/epseq.hpp"

namespace oscalg::test {

using Rng = std::mt19937;

inline Rational rand_rational(Rng& rng, long max_num = 12, long max_den = 4) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational rand_positive_rational(Rng& rng, long max_num = 12, long max_den = 4) {
  std::uniform_int_distribution<long> num(1, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Polynomial rand_polynomial(Rng& rng, int max_degree = 3) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int d = deg(rng);
  std::vector<Rational> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(rand_rational(rng));
  return Polynomial(std::move(coeffs));
}

inline EpSeq rand_epseq(Rng& rng, std::size_t max_prefix = 3, int max_degree = 3) {
  std::uniform_int_distribution<std::size_t> len(0, max_prefix);
  std::size_t k = len(rng);
  std::vector<Rational> prefix;
  for (std::size_t i = 0; i < k; ++i) prefix.push_back(rand_rational(rng));
  return EpSeq(std::move(prefix), rand_polynomial(rng, max_degree));
}

}  // namespace oscalg::test
