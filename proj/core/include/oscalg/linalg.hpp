#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oscalg/rational.hpp"

namespace oscalg {

using RatRow = std::vector<Rational>;
using RatMat = std::vector<RatRow>;  // row-major, rectangular

/// Exact dense linear algebra over the rationals, by Gaussian elimination
/// with deterministic (first nonzero) pivoting. Sizes here are tiny; clarity
/// beats sparsity.

/// Determinant of a square matrix.
Rational determinant(RatMat m);

/// One nontrivial kernel vector of the column space map x -> A x, or nullopt
/// when the columns are independent. Normalized to first nonzero entry 1.
std::optional<RatRow> nullspace_vector(const RatMat& a);

/// Projects b onto the column span of A: returns coefficients x (free
/// variables fixed to zero) together with a flag telling whether A x = b
/// exactly. When the flag is false, x still solves every pivot row, so
/// b - A x is the canonical nonzero residual.
std::pair<RatRow, bool> project_onto_span(const RatMat& a, const RatRow& b);

}  // namespace oscalg
