#pragma once

#include <map>
#include <string>

#include "oscalg/oscillator.hpp"

namespace oscalg {

/// Exact operator of the form  O = sum_k f_k(N) Lambda^k,  where Lambda^k is
/// (a^+)^k for k > 0, (a^-)^|k| for k < 0 and the identity for k = 0. The
/// action on the polynomial basis is
///
///   O P_n = sum_k f_k(n+k) beta_k(n) P_{n+k},
///
/// with beta_k(n) the product of ladder entries sqrt(2) b_j accumulated by
/// Lambda^k (for k < 0 it contains a b_{-1} = 0 factor when n < |k|, so the
/// action vanishes there without special prefix handling).
///
/// Canonical form: no identically-zero coefficients, and for k > 0 the
/// coefficient values at arguments 0..k-1 — which the action never reads —
/// are pinned to the tail polynomial. With that fill, two terms act
/// identically iff their coefficient sequences are equal, so linear algebra
/// on coefficients per shift level is faithful to operator identity.
class ShiftOp {
 public:
  ShiftOp() = default;  // the zero operator

  static ShiftOp identity() { return term(0, EpSeq::constant(Rational(1))); }
  static ShiftOp number() { return term(0, EpSeq(Polynomial::variable())); }
  static ShiftOp raising() { return term(1, EpSeq::constant(Rational(1))); }
  static ShiftOp lowering() { return term(-1, EpSeq::constant(Rational(1))); }
  static ShiftOp diagonal(EpSeq f) { return term(0, std::move(f)); }
  static ShiftOp term(int shift, EpSeq coeff);

  /// Adds f(N) Lambda^shift into this operator, keeping canonical form.
  void add_term(int shift, EpSeq coeff);

  const std::map<int, EpSeq>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient at a shift level (zero sequence when absent).
  EpSeq coeff(int shift) const;

  ShiftOp operator-() const;
  friend ShiftOp operator+(const ShiftOp& a, const ShiftOp& b);
  friend ShiftOp operator-(const ShiftOp& a, const ShiftOp& b);
  friend ShiftOp operator*(const Rational& c, const ShiftOp& o);
  friend bool operator==(const ShiftOp& a, const ShiftOp& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::map<int, EpSeq> terms_;
};

std::ostream& operator<<(std::ostream& os, const ShiftOp& o);

/// Exact operator product. Mixed ladder words are rewritten innermost-first
/// through the contact rules a^- a^+ -> 2 B(N+I), a^+ a^- -> 2 B(N); the
/// result's matrix realization equals the product of the factors' matrix
/// realizations on interior indices. Requires a symbolic spec.
ShiftOp shiftop_mul(const ShiftOp& a, const ShiftOp& b, const RecurrenceSpec& s);

/// AB - BA, exact.
ShiftOp shiftop_commutator(const ShiftOp& a, const ShiftOp& b, const RecurrenceSpec& s);

/// M x M floating realization of the action on span{P_0..P_{M-1}}.
TruncatedOperator shiftop_to_matrix(const ShiftOp& o, const RecurrenceSpec& s, std::size_t m);

}  // namespace oscalg
