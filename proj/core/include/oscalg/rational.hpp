#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "oscalg/error.hpp"

namespace oscalg {

using Integer = mpz_class;

/// Exact rational scalar, always kept in lowest terms with positive
/// denominator. Thin value wrapper over GMP's mpq_class; the additions over
/// raw mpq are a throwing division, strict "p/q" parsing/printing, and exact
/// square-root extraction.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}        // NOLINT: implicit by design, enables 2*x
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Strict parser for "p" and "p/q" with optional leading '-'.
  static Rational parse(std::string_view text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const;
  /// Smallest integer >= *this.
  Integer ceil() const;
  /// Exact square root if *this is a perfect square of a rational.
  std::optional<Rational> sqrt_exact() const;

  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;  // invariant: canonical (lowest terms, den > 0)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace oscalg
