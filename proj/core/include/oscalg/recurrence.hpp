#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "oscalg/epseq.hpp"

namespace oscalg {

/// Uniform sign convention for the off-diagonal entries b_n. The dimension
/// classification only ever sees b_n^2, so a per-index sign would merely
/// conjugate the matrix realizations by a diagonal +-1 operator; a single
/// convention covers the classical families.
enum class BSign { all_positive, all_negative };

/// Coefficient data of the three-term recurrence
///
///   x P_n(x) = b_n P_{n+1}(x) + a_n P_n(x) + b_{n-1} P_{n-1}(x),
///   P_0 = 1, b_{-1} = 0,
///
/// stored as the exact sequences b_n^2 and a_n. A spec is either symbolic
/// (the EpSeq tails are trusted for all n) or prefix-only (built from finite
/// data such as a moment sequence; values are meaningful for n < *horizon
/// only, and operations that need the whole sequence refuse it).
struct RecurrenceSpec {
  EpSeq b2;
  EpSeq a;
  BSign b_sign = BSign::all_positive;
  std::string label;
  std::optional<std::uint32_t> horizon;

  bool symbolic() const { return !horizon.has_value(); }

  double b_value(std::size_t n) const;  // b_n as a floating-point number
};

/// Throws SpecError unless the spec carries symbolic coefficient tails.
void require_symbolic(const RecurrenceSpec& s, const char* operation);

struct ValidationReport {
  bool valid = true;
  std::optional<std::size_t> violation_index;
  std::optional<Rational> violation_value;
  std::string message;
};

/// Checks b2(n) > 0 for every index in scope (all n for symbolic specs, the
/// known window for prefix-only ones). The tail polynomial is screened by
/// exact evaluation at every integer up to its Cauchy root bound plus the
/// sign of the leading coefficient.
ValidationReport validate(const RecurrenceSpec& s);

/// validate() or throw SpecError with the report message.
void require_valid(const RecurrenceSpec& s);

enum class Family { hermite, laguerre };

/// Built-in coefficient families.
///   laguerre (param "alpha" > -1): b2 = (n+1)(n+alpha+1), a = 2n+alpha+1,
///     negative b_n convention;
///   hermite (no params): b2 = (n+1)/2, a = 0, positive b_n.
RecurrenceSpec builtin_family(Family family,
                              const std::map<std::string, Rational>& params = {});

std::optional<Family> family_from_name(std::string_view name);

/// Same b2 and sign, a replaced by zero. Idempotent: an already symmetric
/// spec is returned unchanged, label included.
RecurrenceSpec symmetrize(const RecurrenceSpec& s);

/// Result of evaluating P_n(x): exact when every needed b_n is rational,
/// otherwise an IEEE-double approximation with the mode flagged.
struct EvalResult {
  bool exact = false;
  Rational value;   // meaningful iff exact
  double approx = 0.0;
};

/// P_n(x) through the recurrence. Exact whenever each b2(k), k < n, is a
/// perfect rational square; falls back to floating point otherwise.
EvalResult polynomial_eval(const RecurrenceSpec& s, std::size_t n, const Rational& x);

}  // namespace oscalg
