#pragma once

#include <optional>
#include <span>
#include <utility>

#include "oscalg/closure.hpp"

namespace oscalg {

/// Iterated forward differences of b_n^2 with the b_{-1} = 0 boundary:
/// row 0 is A(0) = b2(n) - b2(n-1) (value b2(0) at n = 0), row j+1 is the
/// forward difference of row j. All rows are exact EpSeq.
struct DifferenceTable {
  std::vector<EpSeq> rows;
};

DifferenceTable difference_table(const RecurrenceSpec& s, std::size_t j_max);

enum class VerdictKind {
  finite_dim4,            ///< algebra closes at dimension 4
  infinite,               ///< symbolic nonconstancy witness exists
  consistent_with_finite, ///< finite window matches the finite-type form
  infinite_witnessed      ///< finite window already rules finiteness out
};

struct Witness {
  std::size_t j = 0;   // difference-table row
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  Rational v1, v2;     // differing values A(j)(n1) != A(j)(n2)
};

struct Verdict {
  VerdictKind kind = VerdictKind::infinite;
  std::optional<Rational> a0, a2;  // finite cases: b2 = (a0 + a2 n)(1 + n)
  std::optional<Witness> witness;
  std::string note;
};

bool operator==(const Witness& x, const Witness& y);
bool operator==(const Verdict& x, const Verdict& y);

/// Dimension verdict for a symbolic spec: finite_dim4 with the extracted
/// (a0, a2) iff the first difference row is constant — equivalently iff b2
/// factors as (a0 + a2 n)(1 + n); otherwise infinite with a concrete row-1
/// nonconstancy witness. Both formulations are computed and must agree.
/// Prefix-only specs are refused (use classify_prefix).
Verdict classify(const RecurrenceSpec& s);

/// The factorization side of the criterion: succeeds iff deg <= 2 and the
/// coefficients (c0, c1, c2) satisfy c1 = c0 + c2, giving a0 = c0, a2 = c2.
std::optional<std::pair<Rational, Rational>> check_factorization(const Polynomial& b2);

/// Verdict from a finite window of b2 values (>= 4, all positive). Finite
/// data can never prove finiteness, so the positive outcome is
/// consistent_with_finite; a window that no valid finite-type sequence can
/// extend yields infinite_witnessed.
Verdict classify_prefix(std::span<const Rational> b2_values, std::size_t j_max);

/// One-stop aggregation: validation, difference table, verdict, the
/// symmetrization invariance check, and the Lie-closure cross verdict.
struct Report {
  std::string label;
  ValidationReport validation;
  std::vector<EpSeq> table_rows;          // symbolic specs only
  std::optional<Verdict> verdict;
  bool symmetrize_invariant = false;      // meaningful iff verdict is set
  std::optional<ClosureResult> closure;   // symbolic specs only
  bool verdicts_agree = false;            // classify vs closure, when both ran
  std::string note;
};

Report classification_report(const RecurrenceSpec& s, const ClosureOptions& options = {},
                             std::size_t j_max = 3);

}  // namespace oscalg
