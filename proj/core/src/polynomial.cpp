#include "oscalg/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace oscalg {

namespace {
const Rational kZero;
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  strip();
}

Polynomial Polynomial::variable() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

const Rational& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Polynomial::leading() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::shifted_arg(long delta) const {
  if (delta == 0 || is_zero()) return *this;
  // Expand sum c_i (n + delta)^i by iterating powers of (n + delta).
  Polynomial shift(std::vector<Rational>{Rational(delta), Rational(1)});
  Polynomial power(Rational(1));
  Polynomial result;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    result += coeffs_[i] * power;
    power = power * shift;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial();
  Polynomial r(p);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (mag == Rational(1));
    if (k == 0) {
      os << mag.to_string();
    } else {
      if (!unit) os << mag.to_string() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace oscalg
