#include "oscalg/classify.hpp"

#include <algorithm>

#include "oscalg/error.hpp"

namespace oscalg {

namespace {

// Two positions where a nonconstant sequence takes different values. Any
// EpSeq constant through n0 + deg + 1 is constant everywhere, so the scan
// is bounded.
Witness nonconstancy_witness(const EpSeq& row, std::size_t j) {
  std::size_t bound = row.prefix_size() +
                      static_cast<std::size_t>(std::max(row.tail().degree(), 0)) + 2;
  Rational first = row.at(0);
  for (std::size_t n = 1; n <= bound; ++n) {
    Rational v = row.at(n);
    if (v != first) {
      return Witness{j, 0, n, first, v};
    }
  }
  throw Error("nonconstancy_witness called on a constant sequence");
}

EpSeq difference_row_zero(const EpSeq& b2) {
  // A(0)(0) = b2(0), A(0)(n) = b2(n) - b2(n-1): subtract the delayed copy
  // with the b_{-1} = 0 boundary folded in.
  std::vector<Rational> pre;
  pre.reserve(b2.prefix_size() + 1);
  pre.push_back(Rational(0));
  for (const auto& v : b2.prefix()) pre.push_back(v);
  EpSeq delayed(std::move(pre), b2.tail().shifted_arg(-1));
  return b2 - delayed;
}

}  // namespace

bool operator==(const Witness& x, const Witness& y) {
  return x.j == y.j && x.n1 == y.n1 && x.n2 == y.n2 && x.v1 == y.v1 && x.v2 == y.v2;
}

bool operator==(const Verdict& x, const Verdict& y) {
  return x.kind == y.kind && x.a0 == y.a0 && x.a2 == y.a2 && x.witness == y.witness &&
         x.note == y.note;
}

DifferenceTable difference_table(const RecurrenceSpec& s, std::size_t j_max) {
  require_valid(s);
  require_symbolic(s, "difference_table");
  DifferenceTable t;
  t.rows.push_back(difference_row_zero(s.b2));
  for (std::size_t j = 1; j <= j_max; ++j) {
    t.rows.push_back(t.rows.back().difference());
  }
  return t;
}

std::optional<std::pair<Rational, Rational>> check_factorization(const Polynomial& b2) {
  if (b2.degree() > 2) return std::nullopt;
  Rational c0 = b2.coeff(0), c1 = b2.coeff(1), c2 = b2.coeff(2);
  if (c1 != c0 + c2) return std::nullopt;
  return std::make_pair(c0, c2);
}

Verdict classify(const RecurrenceSpec& s) {
  require_valid(s);
  require_symbolic(s, "classify");

  EpSeq row0 = difference_row_zero(s.b2);
  EpSeq row1 = row0.difference();

  // Difference-table route and factorization route; they must agree.
  std::optional<Rational> row1_const = row1.as_constant();
  std::optional<std::pair<Rational, Rational>> factored;
  if (s.b2.prefix_size() == 0) factored = check_factorization(s.b2.tail());

  if (row1_const.has_value() != factored.has_value()) {
    throw Error("classify: difference-table and factorization criteria disagree");
  }

  Verdict verdict;
  if (factored) {
    auto [a0, a2] = *factored;
    if (*row1_const != Rational(2) * a2 || row0.at(0) != a0) {
      throw Error("classify: criteria extracted different coefficients");
    }
    // Validity already forces a0 > 0 and a2 >= 0 here.
    verdict.kind = VerdictKind::finite_dim4;
    verdict.a0 = a0;
    verdict.a2 = a2;
    verdict.note = "b2 = (a0 + a2 n)(1 + n); Lie dimension 4";
    return verdict;
  }

  verdict.kind = VerdictKind::infinite;
  verdict.witness = nonconstancy_witness(row1, 1);
  verdict.note = "first difference row is not constant";
  return verdict;
}

Verdict classify_prefix(std::span<const Rational> b2_values, std::size_t j_max) {
  if (b2_values.size() < 4) {
    throw SpecError("classify_prefix: need at least 4 values, got " +
                    std::to_string(b2_values.size()));
  }
  for (std::size_t n = 0; n < b2_values.size(); ++n) {
    if (b2_values[n].sign() <= 0) {
      throw SpecError("classify_prefix: b2 not positive at n=" + std::to_string(n) +
                      " (value " + b2_values[n].to_string() + ")");
    }
  }

  // The only finite-type candidate through the first two values:
  // a0 = b2(0), a2 from b2(1) = (a0 + a2) * 2.
  Rational a0 = b2_values[0];
  Rational a2 = b2_values[1] / Rational(2) - a0;
  bool matches = true;
  for (std::size_t n = 0; n < b2_values.size() && matches; ++n) {
    Rational expected = (a0 + a2 * Rational(static_cast<long>(n))) *
                        (Rational(1) + Rational(static_cast<long>(n)));
    matches = b2_values[n] == expected;
  }

  Verdict verdict;
  if (matches && a2 >= Rational(0)) {
    verdict.kind = VerdictKind::consistent_with_finite;
    verdict.a0 = a0;
    verdict.a2 = a2;
    verdict.note = "window matches b2 = (a0 + a2 n)(1 + n); finite data cannot prove "
                   "finiteness";
    return verdict;
  }
  if (matches) {
    verdict.kind = VerdictKind::infinite_witnessed;
    verdict.note = "window matches the finite-type form only with a2 = " + a2.to_string() +
                   " < 0, which forces b2 <= 0 eventually; no valid finite-type extension";
    return verdict;
  }

  // A mismatching window has a nonconstant difference row; find the first.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> row0(b2_values.size());
  row0[0] = b2_values[0];
  for (std::size_t n = 1; n < b2_values.size(); ++n) {
    row0[n] = b2_values[n] - b2_values[n - 1];
  }
  rows.push_back(std::move(row0));
  for (std::size_t j = 1; j <= j_max && rows.back().size() > 1; ++j) {
    const auto& prev = rows.back();
    std::vector<Rational> next(prev.size() - 1);
    for (std::size_t n = 0; n + 1 < prev.size(); ++n) next[n] = prev[n + 1] - prev[n];
    rows.push_back(std::move(next));
  }
  verdict.kind = VerdictKind::infinite_witnessed;
  for (std::size_t j = 1; j < rows.size(); ++j) {
    const auto& row = rows[j];
    for (std::size_t n = 1; n < row.size(); ++n) {
      if (row[n] != row[0]) {
        verdict.witness = Witness{j, 0, n, row[0], row[n]};
        verdict.note = "difference row " + std::to_string(j) + " not constant on the window";
        return verdict;
      }
    }
  }
  // Unreachable: a window failing the fit has a nonconstant row 1.
  throw Error("classify_prefix: inconsistent window with constant difference rows");
}

Report classification_report(const RecurrenceSpec& s, const ClosureOptions& options,
                             std::size_t j_max) {
  Report report;
  report.label = s.label;
  report.validation = validate(s);
  if (!report.validation.valid) {
    return report;
  }

  if (!s.symbolic()) {
    std::vector<Rational> window;
    for (std::size_t n = 0; n < *s.horizon; ++n) window.push_back(s.b2.at(n));
    report.verdict = classify_prefix(window, j_max);
    report.symmetrize_invariant = true;  // the verdict never reads a
    report.note = "prefix-only spec: verdict from the finite window; closure skipped";
    return report;
  }

  DifferenceTable table = difference_table(s, j_max);
  report.table_rows = table.rows;
  report.verdict = classify(s);
  report.symmetrize_invariant = (classify(symmetrize(s)) == *report.verdict);
  report.closure = lie_closure(s, options);

  bool finite = report.verdict->kind == VerdictKind::finite_dim4;
  bool closed4 = report.closure->status == ClosureStatus::closed && report.closure->dim == 4;
  report.verdicts_agree = (finite == closed4);
  return report;
}

}  // namespace oscalg
