#pragma once

#include <optional>
#include <span>
#include <vector>

#include "oscalg/shift_op.hpp"

namespace oscalg {

enum class ClosureStatus { closed, budget_exceeded };

struct ClosureOptions {
  std::size_t max_dim = 24;
  std::size_t max_depth = 8;
  /// Coefficient tails past this degree abort the run; unbounded degree
  /// growth is itself a growth witness.
  int coeff_degree_cap = 16;
};

/// Outcome of the commutator closure started from {I, N, a^+, a^-}. The
/// identity is counted as a generator, so a closed algebra of the classical
/// kind has dim == 4. Closed results are verified: every pairwise commutator
/// of basis elements reduces to zero against the basis, and the basis is
/// linearly independent by construction.
struct ClosureResult {
  ClosureStatus status = ClosureStatus::closed;
  std::vector<ShiftOp> basis;
  std::size_t dim = 0;
  std::size_t depth_reached = 0;
  /// (depth, dim) after every basis extension, seeded with (0, 4).
  std::vector<std::pair<std::size_t, std::size_t>> growth_log;
  std::string note;
};

/// Smallest commutator-closed linear span containing {I, N, a^+, a^-},
/// computed by exhausting commutator pairs in lexicographic basis order and
/// appending exact residuals. Reports budget_exceeded as soon as the basis
/// outgrows max_dim, a bracket exceeds max_depth nesting, or a coefficient
/// tail passes the degree cap. Requires a symbolic spec.
ClosureResult lie_closure(const RecurrenceSpec& s, const ClosureOptions& options = {});
ClosureResult lie_closure(const RecurrenceSpec& s, std::size_t max_dim, std::size_t max_depth);

/// Subtracts the unique exact projection of the candidate onto the span of
/// the basis (solved per shift level over the rationals); nullopt when the
/// candidate already lies in the span.
std::optional<ShiftOp> reduce_against_basis(const ShiftOp& candidate,
                                            std::span<const ShiftOp> basis);

}  // namespace oscalg
