#include "oscalg/shift_op.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "oscalg/error.hpp"

namespace oscalg {

namespace {

// Values at arguments 0..shift-1 are never read by the action of a positive
// shift term; pin them to the tail so equal operators have equal coefficients.
EpSeq fill_dont_care(const EpSeq& f, int shift) {
  if (shift <= 0 || f.prefix_size() == 0) return f;
  std::size_t k = static_cast<std::size_t>(shift);
  std::vector<Rational> pre(f.prefix());
  for (std::size_t n = 0; n < std::min(k, pre.size()); ++n) {
    pre[n] = f.tail().eval(Rational(static_cast<long>(n)));
  }
  return EpSeq(std::move(pre), f.tail());
}

struct Term {
  int shift;
  EpSeq coeff;
};

// Rewrite context: the diagonal eigenvalue sequences of 2B(N) and 2B(N+I).
struct ContactRules {
  EpSeq two_bn;
  EpSeq two_bni;

  explicit ContactRules(const RecurrenceSpec& s) {
    auto [bn, bni] = b_diagonals(s);
    two_bn = Rational(2) * bn.values;
    two_bni = Rational(2) * bni.values;
  }
};

// Product of two pure terms f(N) Lambda^a * g(N) Lambda^b. The diagonal
// coefficients commute past ladder powers via Lambda^a g(N) = g(N-a) Lambda^a;
// same-sign ladder powers concatenate, opposite signs are eliminated one
// contact at a time, innermost first.
Term term_mul(const ContactRules& rules, const Term& lhs, const Term& rhs) {
  int a = lhs.shift;
  int b = rhs.shift;
  EpSeq coeff = lhs.coeff * rhs.coeff.at_offset(-a);

  if (a == 0 || b == 0 || (a > 0) == (b > 0)) {
    return {a + b, std::move(coeff)};
  }

  // One contact at the junction of Lambda^a Lambda^b.
  EpSeq one = EpSeq::constant(Rational(1));
  Term inner, outer;
  if (a > 0) {  // ... a^+ a^- ... -> 2 B(N)
    inner = term_mul(rules, Term{0, rules.two_bn}, Term{b + 1, one});
    outer = term_mul(rules, Term{a - 1, one}, inner);
  } else {  // ... a^- a^+ ... -> 2 B(N+I)
    inner = term_mul(rules, Term{0, rules.two_bni}, Term{b - 1, one});
    outer = term_mul(rules, Term{a + 1, one}, inner);
  }
  return {outer.shift, coeff * outer.coeff};
}

}  // namespace

ShiftOp ShiftOp::term(int shift, EpSeq coeff) {
  ShiftOp o;
  o.add_term(shift, std::move(coeff));
  return o;
}

void ShiftOp::add_term(int shift, EpSeq coeff) {
  coeff = fill_dont_care(coeff, shift);
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(shift, coeff);
  if (!fresh) {
    // The fill is linear, so the sum of filled coefficients is filled.
    EpSeq sum = it->second + coeff;
    if (sum.is_zero()) {
      terms_.erase(it);
    } else {
      it->second = std::move(sum);
    }
  }
}

EpSeq ShiftOp::coeff(int shift) const {
  auto it = terms_.find(shift);
  return it == terms_.end() ? EpSeq() : it->second;
}

ShiftOp ShiftOp::operator-() const {
  ShiftOp r;
  for (const auto& [k, f] : terms_) r.terms_.emplace(k, -f);
  return r;
}

ShiftOp operator+(const ShiftOp& a, const ShiftOp& b) {
  ShiftOp r = a;
  for (const auto& [k, f] : b.terms_) r.add_term(k, f);
  return r;
}

ShiftOp operator-(const ShiftOp& a, const ShiftOp& b) {
  ShiftOp r = a;
  for (const auto& [k, f] : b.terms_) r.add_term(k, -f);
  return r;
}

ShiftOp operator*(const Rational& c, const ShiftOp& o) {
  ShiftOp r;
  if (c.is_zero()) return r;
  for (const auto& [k, f] : o.terms_) r.terms_.emplace(k, c * f);
  return r;
}

std::string ShiftOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.to_string() << ")";
    if (k > 0) {
      os << "*A+";
      if (k > 1) os << "^" << k;
    } else if (k < 0) {
      os << "*A-";
      if (k < -1) os << "^" << -k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ShiftOp& o) {
  return os << o.to_string();
}

ShiftOp shiftop_mul(const ShiftOp& a, const ShiftOp& b, const RecurrenceSpec& s) {
  require_symbolic(s, "shiftop_mul");
  ContactRules rules(s);  // b_diagonals validates the spec
  ShiftOp out;
  for (const auto& [ka, fa] : a.terms()) {
    for (const auto& [kb, fb] : b.terms()) {
      Term t = term_mul(rules, Term{ka, fa}, Term{kb, fb});
      out.add_term(t.shift, std::move(t.coeff));
    }
  }
  return out;
}

ShiftOp shiftop_commutator(const ShiftOp& a, const ShiftOp& b, const RecurrenceSpec& s) {
  return shiftop_mul(a, b, s) - shiftop_mul(b, a, s);
}

TruncatedOperator shiftop_to_matrix(const ShiftOp& o, const RecurrenceSpec& s, std::size_t m) {
  require_valid(s);
  const double sqrt2 = std::sqrt(2.0);
  TruncatedOperator t{m, Eigen::MatrixXd::Zero(m, m), o.to_string()};
  for (const auto& [k, f] : o.terms()) {
    for (std::size_t n = 0; n < m; ++n) {
      long row = static_cast<long>(n) + k;
      if (row < 0 || row >= static_cast<long>(m)) continue;
      double beta = 1.0;
      if (k > 0) {
        for (int i = 0; i < k; ++i) beta *= sqrt2 * s.b_value(n + static_cast<std::size_t>(i));
      } else if (k < 0) {
        if (n < static_cast<std::size_t>(-k)) continue;  // b_{-1} factor
        for (int i = 1; i <= -k; ++i) beta *= sqrt2 * s.b_value(n - static_cast<std::size_t>(i));
      }
      t.entries(row, static_cast<long>(n)) =
          f.at(static_cast<std::size_t>(row)).to_double() * beta;
    }
  }
  return t;
}

}  // namespace oscalg
