#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oscalg/polynomial.hpp"

namespace oscalg {

/// Eventually polynomial sequence: finitely many exceptional values followed
/// by an exact polynomial tail,
///
///   s(n) = prefix[n]        for n <  n0
///   s(n) = tail(n)          for n >= n0.
///
/// The stored form is canonical: n0 is minimal, i.e. the last prefix entry
/// (if any) differs from the tail evaluated at the same index. This makes
/// equality and constancy checks structural. The class is closed under
/// pointwise +, -, *, scalar multiples and argument shifts, which is exactly
/// what iterated forward differences and the shift-operator algebra need.
class EpSeq {
 public:
  EpSeq() = default;  // the zero sequence
  EpSeq(Polynomial tail);  // NOLINT: implicit by design
  EpSeq(std::vector<Rational> prefix, Polynomial tail);

  static EpSeq constant(const Rational& c) { return EpSeq(Polynomial(c)); }

  std::size_t prefix_size() const { return prefix_.size(); }
  const std::vector<Rational>& prefix() const { return prefix_; }
  const Polynomial& tail() const { return tail_; }

  Rational at(std::size_t n) const;

  bool is_zero() const { return prefix_.empty() && tail_.is_zero(); }

  /// The constant value iff the sequence is constant everywhere
  /// (canonical form: empty prefix and tail of degree <= 0).
  std::optional<Rational> as_constant() const;

  /// Forward difference n -> s(n+1) - s(n).
  EpSeq difference() const;

  /// Argument shift n -> s(n + delta). For delta < 0 the values at
  /// n < -delta, where the argument would be negative, are taken from the
  /// tail polynomial (which evaluates at any integer); callers that care
  /// about those positions must mask them themselves (the shift-operator
  /// product does so through its b_{-1} = 0 ladder factor).
  EpSeq at_offset(long delta) const;

  EpSeq operator-() const;
  friend EpSeq operator+(const EpSeq& a, const EpSeq& b);
  friend EpSeq operator-(const EpSeq& a, const EpSeq& b);
  friend EpSeq operator*(const EpSeq& a, const EpSeq& b);  // pointwise
  friend EpSeq operator*(const Rational& c, const EpSeq& s);

  friend bool operator==(const EpSeq& a, const EpSeq& b) {
    return a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
  }

  /// "tail" when there is no prefix, "[v0, v1 | tail]" otherwise.
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Rational> prefix_;
  Polynomial tail_;
};

std::ostream& operator<<(std::ostream& os, const EpSeq& s);

/// Exact linear dependence over the rationals: coefficients c_i, not all
/// zero, with sum c_i * seqs[i] identically zero, if any exist. The result
/// is normalized so that its first nonzero entry is 1.
std::optional<std::vector<Rational>> linear_dependence(std::span<const EpSeq> seqs);

}  // namespace oscalg
