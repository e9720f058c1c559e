#pragma once

#include <vector>

#include "oscalg/recurrence.hpp"

namespace oscalg {

/// Moment sequence mu_0..mu_K of a probability measure with infinite
/// support: mu_0 = 1 and every leading principal Hankel determinant
/// det[mu_{i+j}] is positive. Both conditions are enforced at construction.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<Rational> moments);

  std::size_t max_index() const { return moments_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return moments_[k]; }
  const std::vector<Rational>& values() const { return moments_; }

 private:
  std::vector<Rational> moments_;
};

struct RecurrenceTable {
  std::vector<Rational> a;
  std::vector<Rational> b2;
};

/// First `count` recurrence coefficients of the orthonormal system for the
/// moment functional, by exact Hankel determinant ratios:
///
///   b_n^2 = D_{n+1} D_{n-1} / D_n^2,    a_n = E_n / D_n - E_{n-1} / D_{n-1},
///
/// where D_n = det[mu_{i+j}]_{0..n} and E_n is the same determinant with the
/// last column's moment indices raised by one (E_{-1} = 0, D_{-1} = 1).
/// Requires moments up to mu_{2 count}; a shortfall or a non-positive Hankel
/// determinant is a hard error.
RecurrenceTable moments_to_recurrence(const MomentSequence& m, std::size_t count);

/// Packages the table as a prefix-only RecurrenceSpec (horizon = count).
RecurrenceSpec spec_from_moments(const MomentSequence& m, std::size_t count,
                                 const std::string& label = "moments");

}  // namespace oscalg
