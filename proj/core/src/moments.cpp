#include "oscalg/moments.hpp"

#include "oscalg/error.hpp"
#include "oscalg/linalg.hpp"

namespace oscalg {

namespace {

// det[mu_{i+j}]_{i,j=0..n}, optionally with the last column's moment indices
// raised by one (the shifted Hankel determinant used for the diagonal a_n).
Rational hankel_det(const std::vector<Rational>& mu, std::size_t n, bool shift_last) {
  RatMat m(n + 1, RatRow(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      std::size_t k = i + j + (shift_last && j == n ? 1 : 0);
      m[i][j] = mu[k];
    }
  }
  return determinant(std::move(m));
}

}  // namespace

MomentSequence::MomentSequence(std::vector<Rational> moments) : moments_(std::move(moments)) {
  if (moments_.empty()) {
    throw SpecError("moments: empty sequence");
  }
  if (moments_[0] != Rational(1)) {
    throw SpecError("moments: mu_0 must be 1 (probability measure), got " +
                    moments_[0].to_string());
  }
  std::size_t k = max_index();
  for (std::size_t m = 0; 2 * m <= k; ++m) {
    if (hankel_det(moments_, m, false).sign() <= 0) {
      throw SpecError("moments: Hankel matrix not positive definite at order " +
                      std::to_string(m));
    }
  }
}

RecurrenceTable moments_to_recurrence(const MomentSequence& m, std::size_t count) {
  if (count == 0) {
    throw SpecError("moments_to_recurrence: count must be positive");
  }
  if (m.max_index() < 2 * count) {
    throw SpecError("moments_to_recurrence: need moments up to mu_" +
                    std::to_string(2 * count) + ", have mu_" +
                    std::to_string(m.max_index()));
  }

  const std::vector<Rational>& mu = m.values();

  // D[n+1] = D_n, E[n+1] = E_n so that index 0 holds the n = -1 seeds.
  std::vector<Rational> d(count + 2), e(count + 1);
  d[0] = Rational(1);
  e[0] = Rational(0);
  for (std::size_t n = 0; n <= count; ++n) {
    d[n + 1] = hankel_det(mu, n, false);
    if (d[n + 1].sign() <= 0) {
      throw SpecError("moments_to_recurrence: Hankel determinant not positive at order " +
                      std::to_string(n));
    }
  }
  for (std::size_t n = 0; n < count; ++n) {
    e[n + 1] = hankel_det(mu, n, true);
  }

  RecurrenceTable table;
  table.a.reserve(count);
  table.b2.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    table.a.push_back(e[n + 1] / d[n + 1] - e[n] / d[n]);
    table.b2.push_back(d[n + 2] * d[n] / (d[n + 1] * d[n + 1]));
  }
  return table;
}

RecurrenceSpec spec_from_moments(const MomentSequence& m, std::size_t count,
                                 const std::string& label) {
  RecurrenceTable t = moments_to_recurrence(m, count);
  RecurrenceSpec s;
  s.b2 = EpSeq(t.b2, Polynomial());
  s.a = EpSeq(t.a, Polynomial());
  s.b_sign = BSign::all_positive;
  s.label = label;
  s.horizon = static_cast<std::uint32_t>(count);
  return s;
}

}  // namespace oscalg
