#include "oscalg/recurrence.hpp"

#include <cmath>

#include "oscalg/error.hpp"

namespace oscalg {

double RecurrenceSpec::b_value(std::size_t n) const {
  double root = std::sqrt(b2.at(n).to_double());
  return b_sign == BSign::all_negative ? -root : root;
}

void require_symbolic(const RecurrenceSpec& s, const char* operation) {
  if (!s.symbolic()) {
    throw SpecError(std::string(operation) +
                    " needs a symbolic b2 sequence; this spec carries prefix-only "
                    "data (use classify_prefix / the moments pipeline)");
  }
}

namespace {

ValidationReport fail_at(std::size_t n, const Rational& value) {
  ValidationReport r;
  r.valid = false;
  r.violation_index = n;
  r.violation_value = value;
  r.message = "b2 not positive at n=" + std::to_string(n) +
              " (value " + value.to_string() + ")";
  return r;
}

// Largest integer that could be a real root of p: Cauchy's bound
// 1 + max |c_i| / |c_d|.
std::size_t integer_root_bound(const Polynomial& p) {
  int d = p.degree();
  Rational top = p.leading().abs();
  Rational worst(0);
  for (int i = 0; i < d; ++i) {
    Rational m = p.coeff(static_cast<std::size_t>(i)).abs() / top;
    if (m > worst) worst = m;
  }
  Integer bound = (Rational(1) + worst).ceil();
  return static_cast<std::size_t>(bound.get_ui());
}

}  // namespace

ValidationReport validate(const RecurrenceSpec& s) {
  if (!s.symbolic()) {
    for (std::size_t n = 0; n < *s.horizon; ++n) {
      Rational v = s.b2.at(n);
      if (v.sign() <= 0) return fail_at(n, v);
    }
    ValidationReport r;
    r.message = "valid on the known window n < " + std::to_string(*s.horizon);
    return r;
  }

  for (std::size_t n = 0; n < s.b2.prefix_size(); ++n) {
    if (s.b2.prefix()[n].sign() <= 0) return fail_at(n, s.b2.prefix()[n]);
  }

  const Polynomial& tail = s.b2.tail();
  std::size_t n0 = s.b2.prefix_size();
  if (tail.degree() < 0) {
    return fail_at(n0, Rational(0));
  }
  if (tail.leading().sign() < 0) {
    // Eventually negative; the first offending index is at or just past the
    // root bound, so this loop terminates.
    for (std::size_t n = n0;; ++n) {
      Rational v = tail.eval(Rational(static_cast<long>(n)));
      if (v.sign() <= 0) return fail_at(n, v);
    }
  }
  std::size_t scan_to = std::max(integer_root_bound(tail), n0) + 1;
  for (std::size_t n = n0; n <= scan_to; ++n) {
    Rational v = tail.eval(Rational(static_cast<long>(n)));
    if (v.sign() <= 0) return fail_at(n, v);
  }
  ValidationReport r;
  r.message = "valid";
  return r;
}

void require_valid(const RecurrenceSpec& s) {
  ValidationReport r = validate(s);
  if (!r.valid) throw SpecError("invalid spec: " + r.message);
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "hermite") return Family::hermite;
  if (name == "laguerre") return Family::laguerre;
  return std::nullopt;
}

RecurrenceSpec builtin_family(Family family, const std::map<std::string, Rational>& params) {
  RecurrenceSpec s;
  switch (family) {
    case Family::hermite: {
      if (!params.empty()) {
        throw SpecError("family hermite takes no parameters");
      }
      s.b2 = EpSeq(Polynomial(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
      s.a = EpSeq();
      s.b_sign = BSign::all_positive;
      s.label = "hermite";
      return s;
    }
    case Family::laguerre: {
      auto it = params.find("alpha");
      if (it == params.end()) {
        throw SpecError("family laguerre requires parameter alpha");
      }
      if (params.size() != 1) {
        throw SpecError("family laguerre takes only parameter alpha");
      }
      const Rational& alpha = it->second;
      if (alpha <= Rational(-1)) {
        throw SpecError("laguerre parameter alpha must be > -1, got " + alpha.to_string());
      }
      // b2 = (n+1)(n+alpha+1), a = 2n + alpha + 1, negative b_n convention.
      Rational a1 = alpha + Rational(1);
      s.b2 = EpSeq(Polynomial(std::vector<Rational>{a1, alpha + Rational(2), Rational(1)}));
      s.a = EpSeq(Polynomial(std::vector<Rational>{a1, Rational(2)}));
      s.b_sign = BSign::all_negative;
      s.label = "laguerre(alpha=" + alpha.to_string() + ")";
      return s;
    }
  }
  throw SpecError("unknown family");
}

RecurrenceSpec symmetrize(const RecurrenceSpec& s) {
  if (s.a.is_zero()) return s;
  RecurrenceSpec sym = s;
  sym.a = EpSeq();
  sym.label = s.label.empty() ? "symmetrized" : s.label + " (symmetrized)";
  return sym;
}

EvalResult polynomial_eval(const RecurrenceSpec& s, std::size_t n, const Rational& x) {
  require_valid(s);
  if (!s.symbolic() && n > *s.horizon) {
    throw SpecError("polynomial_eval: index " + std::to_string(n) +
                    " exceeds the known coefficient window of this prefix-only spec");
  }

  EvalResult result;
  if (n == 0) {
    result.exact = true;
    result.value = Rational(1);
    result.approx = 1.0;
    return result;
  }

  // Exact route: possible iff every needed b_n is itself rational.
  std::vector<Rational> b(n);
  bool exact = true;
  for (std::size_t k = 0; k < n && exact; ++k) {
    if (auto root = s.b2.at(k).sqrt_exact()) {
      b[k] = s.b_sign == BSign::all_negative ? -*root : *root;
    } else {
      exact = false;
    }
  }

  if (exact) {
    Rational prev(1);  // P_0
    Rational curr = (x - s.a.at(0)) / b[0];
    for (std::size_t k = 1; k < n; ++k) {
      Rational next = ((x - s.a.at(k)) * curr - b[k - 1] * prev) / b[k];
      prev = curr;
      curr = next;
    }
    result.exact = true;
    result.value = curr;
    result.approx = curr.to_double();
    return result;
  }

  double xd = x.to_double();
  double prev = 1.0;
  double curr = (xd - s.a.at(0).to_double()) / s.b_value(0);
  for (std::size_t k = 1; k < n; ++k) {
    double next = ((xd - s.a.at(k).to_double()) * curr - s.b_value(k - 1) * prev) / s.b_value(k);
    prev = curr;
    curr = next;
  }
  result.exact = false;
  result.approx = curr;
  return result;
}

}  // namespace oscalg
