#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oscalg/rational.hpp"

namespace oscalg {

/// Dense exact polynomial in the index variable n. Coefficients are stored
/// ascending (coeffs()[0] is the constant term) with trailing zeros stripped,
/// so the representation is canonical and equality is structural. The zero
/// polynomial has degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit by design
  Polynomial(int constant) : Polynomial(Rational(constant)) {}
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The monomial n.
  static Polynomial variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of n^i; zero beyond the degree.
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;

  Rational eval(const Rational& x) const;

  /// p(n + delta), expanded.
  Polynomial shifted_arg(long delta) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(std::string_view var = "n") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace oscalg
