#include "oscalg/rational.hpp"

#include <cctype>
#include <ostream>

namespace oscalg {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw Error("rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };

  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) {
    throw ParseError(i, "expected digits in rational literal");
  }
  std::string num_str(text.substr(0, num_end));

  if (num_end == text.size()) {
    return Rational(Integer(num_str));
  }
  if (text[num_end] != '/') {
    throw ParseError(num_end, "unexpected character in rational literal");
  }
  std::size_t den_begin = num_end + 1;
  std::size_t den_end = digits(den_begin);
  if (den_end == den_begin || den_end != text.size()) {
    throw ParseError(den_begin, "expected positive integer denominator");
  }
  Integer den(std::string(text.substr(den_begin)));
  if (sgn(den) == 0) {
    throw ParseError(den_begin, "zero denominator");
  }
  return Rational(Integer(num_str), den);
}

Rational Rational::abs() const {
  Rational r(*this);
  r.q_ = ::abs(r.q_);
  return r;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(num().get_mpz_t()) ||
      !mpz_perfect_square_p(den().get_mpz_t())) {
    return std::nullopt;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error("rational division by zero");
  }
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace oscalg
