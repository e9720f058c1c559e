#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

#include "oscalg/recurrence.hpp"

namespace oscalg {

/// Floating-point realization of an operator on span{P_0,...,P_{M-1}}.
/// Matrix entries involve sqrt(2) * b_n, which is irrational in general;
/// everything classification-relevant stays exact in the symbolic layer,
/// and this layer exists to validate it independently.
struct TruncatedOperator {
  std::size_t dim = 0;
  Eigen::MatrixXd entries;
  std::string label;
};

struct LadderOps {
  TruncatedOperator a_plus;   // entry (n+1, n) = sqrt(2) b_n
  TruncatedOperator a_minus;  // entry (n-1, n) = sqrt(2) b_{n-1}
  TruncatedOperator n_op;     // diag(0..M-1)
};

/// Truncated ladder and number operators for a valid spec; M >= 2.
LadderOps build_ladder(const RecurrenceSpec& s, std::size_t m);

enum class DiagRole { b_of_n, b_of_n_plus_i, commutator };

/// Exact diagonal eigenvalue sequence of an operator function of N.
struct DiagonalSeq {
  EpSeq values;
  DiagRole role = DiagRole::b_of_n;
};

/// Eigenvalue sequences of B(N) and B(N+I):
///   B(N+I) P_n = b_n^2 P_n          -> bNI(n) = b2(n)
///   B(N)   P_n = b_{n-1}^2 P_n      -> bN(0) = 0, bN(n) = b2(n-1)
/// The n = 0 value of bN reflects the b_{-1} = 0 boundary and is kept as an
/// exact exceptional prefix entry where it differs from the shifted tail.
std::pair<DiagonalSeq, DiagonalSeq> b_diagonals(const RecurrenceSpec& s);

/// Exact diagonal of [a^-, a^+] = 2 (B(N+I) - B(N)), boundary included.
DiagonalSeq commutator_diag(const RecurrenceSpec& s);

struct RelationReport {
  std::string relation;
  double max_residual = 0.0;
  int checked_indices = 0;
  bool pass = false;
};

struct VerifyReport {
  std::string label;
  std::size_t truncation = 0;
  double tolerance = 0.0;
  std::vector<RelationReport> relations;
  bool pass = false;
};

/// Checks the defining relations
///   a^- a^+ = 2 B(N+I),  a^+ a^- = 2 B(N),  [N, a^+-] = +- a^+-
/// entrywise on the interior indices 0..M-2 (truncation corrupts the last
/// index of the diagonal products). The N-commutators are evaluated by
/// integer scaling of entries, so their residual is exactly zero for honest
/// ladder matrices. M >= 3.
VerifyReport verify_relations(const RecurrenceSpec& s, std::size_t m, double tol);

/// Same checks against caller-supplied matrices; lets tests inject a
/// perturbed ladder and watch the corresponding relation fail.
VerifyReport verify_ladder(const RecurrenceSpec& s, const LadderOps& ops, double tol);

/// 1e-10 up to M = 64, then scaled by M * max b2 relative to the M = 64 case.
double suggested_tolerance(const RecurrenceSpec& s, std::size_t m);

}  // namespace oscalg
