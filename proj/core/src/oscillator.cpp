#include "oscalg/oscillator.hpp"

#include <cmath>

#include "oscalg/error.hpp"

namespace oscalg {

namespace {

void check_window(const RecurrenceSpec& s, std::size_t m, const char* what) {
  if (!s.symbolic() && m > *s.horizon + 1) {
    throw SpecError(std::string(what) + ": truncation M=" + std::to_string(m) +
                    " exceeds the known coefficient window (horizon " +
                    std::to_string(*s.horizon) + ")");
  }
}

}  // namespace

LadderOps build_ladder(const RecurrenceSpec& s, std::size_t m) {
  require_valid(s);
  if (m < 2) throw SpecError("build_ladder: M must be >= 2");
  check_window(s, m, "build_ladder");

  const double sqrt2 = std::sqrt(2.0);
  LadderOps ops;
  ops.a_plus = {m, Eigen::MatrixXd::Zero(m, m), "a+"};
  ops.a_minus = {m, Eigen::MatrixXd::Zero(m, m), "a-"};
  ops.n_op = {m, Eigen::MatrixXd::Zero(m, m), "N"};
  for (std::size_t n = 0; n + 1 < m; ++n) {
    double entry = sqrt2 * s.b_value(n);
    ops.a_plus.entries(n + 1, n) = entry;
    ops.a_minus.entries(n, n + 1) = entry;
  }
  for (std::size_t n = 0; n < m; ++n) {
    ops.n_op.entries(n, n) = static_cast<double>(n);
  }
  return ops;
}

std::pair<DiagonalSeq, DiagonalSeq> b_diagonals(const RecurrenceSpec& s) {
  require_valid(s);
  require_symbolic(s, "b_diagonals");

  DiagonalSeq bni{s.b2, DiagRole::b_of_n_plus_i};

  std::vector<Rational> pre;
  pre.reserve(s.b2.prefix_size() + 1);
  pre.push_back(Rational(0));  // b_{-1} = 0
  for (const auto& v : s.b2.prefix()) pre.push_back(v);
  DiagonalSeq bn{EpSeq(std::move(pre), s.b2.tail().shifted_arg(-1)), DiagRole::b_of_n};

  return {std::move(bn), std::move(bni)};
}

DiagonalSeq commutator_diag(const RecurrenceSpec& s) {
  auto [bn, bni] = b_diagonals(s);
  return {Rational(2) * (bni.values - bn.values), DiagRole::commutator};
}

VerifyReport verify_ladder(const RecurrenceSpec& s, const LadderOps& ops, double tol) {
  std::size_t m = ops.a_plus.dim;
  if (m < 3) throw SpecError("verify_relations: M must be >= 3");
  check_window(s, m, "verify_relations");

  VerifyReport report;
  report.label = s.label;
  report.truncation = m;
  report.tolerance = tol;

  const std::size_t interior = m - 1;  // rows/cols 0..M-2
  auto max_interior = [&](const Eigen::MatrixXd& r) {
    return r.topLeftCorner(interior, interior).cwiseAbs().maxCoeff();
  };

  // Diagonal relations, as genuine matrix products. Only the interior
  // diagonal is corrected; index M-1 is excluded from the check anyway.
  Eigen::MatrixXd lower_raise = ops.a_minus.entries * ops.a_plus.entries;
  Eigen::MatrixXd raise_lower = ops.a_plus.entries * ops.a_minus.entries;
  for (std::size_t n = 0; n < interior; ++n) {
    lower_raise(n, n) -= 2.0 * s.b2.at(n).to_double();
    double bn2 = n == 0 ? 0.0 : s.b2.at(n - 1).to_double();
    raise_lower(n, n) -= 2.0 * bn2;
  }

  // [N, X] has entries (i - j) X_ij: an exact integer scaling, never a
  // product of two irrational entries.
  Eigen::MatrixXd n_comm_plus(m, m), n_comm_minus(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double gap = static_cast<double>(i) - static_cast<double>(j);
      n_comm_plus(i, j) = (gap - 1.0) * ops.a_plus.entries(i, j);
      n_comm_minus(i, j) = (gap + 1.0) * ops.a_minus.entries(i, j);
    }
  }

  auto add = [&](const char* name, const Eigen::MatrixXd& residual) {
    RelationReport r;
    r.relation = name;
    r.max_residual = max_interior(residual);
    r.checked_indices = static_cast<int>(interior);
    r.pass = r.max_residual <= tol;
    report.relations.push_back(std::move(r));
  };
  add("a-a+ = 2B(N+I)", lower_raise);
  add("a+a- = 2B(N)", raise_lower);
  add("[N,a+-] = +-a+-", n_comm_plus.cwiseAbs().cwiseMax(n_comm_minus.cwiseAbs()));

  report.pass = true;
  for (const auto& r : report.relations) report.pass = report.pass && r.pass;
  return report;
}

VerifyReport verify_relations(const RecurrenceSpec& s, std::size_t m, double tol) {
  require_valid(s);
  if (m < 3) throw SpecError("verify_relations: M must be >= 3");
  return verify_ladder(s, build_ladder(s, m), tol);
}

double suggested_tolerance(const RecurrenceSpec& s, std::size_t m) {
  const double base = 1e-10;
  if (m <= 64) return base;
  auto max_b2 = [&](std::size_t upto) {
    double mx = 0.0;
    for (std::size_t n = 0; n < upto; ++n) mx = std::max(mx, s.b2.at(n).to_double());
    return std::max(mx, 1.0);
  };
  return base * (static_cast<double>(m) * max_b2(m)) / (64.0 * max_b2(64));
}

}  // namespace oscalg
