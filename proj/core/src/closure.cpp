#include "oscalg/closure.hpp"

#include <algorithm>
#include <set>

#include "oscalg/error.hpp"
#include "oscalg/linalg.hpp"

namespace oscalg {

namespace {

// Flattens operators into exact coordinate vectors: for every shift level
// present anywhere, the values on the common exceptional window followed by
// the tail coefficients. A combination vanishes iff all coordinates do.
RatMat coordinatize(const ShiftOp& candidate, std::span<const ShiftOp> basis) {
  std::set<int> shifts;
  for (const auto& [k, f] : candidate.terms()) shifts.insert(k);
  for (const auto& op : basis) {
    for (const auto& [k, f] : op.terms()) shifts.insert(k);
  }

  RatMat rows;  // one row per coordinate; columns: basis..., candidate
  std::size_t cols = basis.size() + 1;
  for (int k : shifts) {
    std::vector<EpSeq> level;
    level.reserve(cols);
    for (const auto& op : basis) level.push_back(op.coeff(k));
    level.push_back(candidate.coeff(k));

    std::size_t n0 = 0;
    int deg = 0;
    for (const auto& f : level) {
      n0 = std::max(n0, f.prefix_size());
      deg = std::max(deg, f.tail().degree());
    }
    for (std::size_t n = 0; n < n0; ++n) {
      RatRow row(cols);
      for (std::size_t j = 0; j < cols; ++j) row[j] = level[j].at(n);
      rows.push_back(std::move(row));
    }
    for (int d = 0; d <= deg; ++d) {
      RatRow row(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        row[j] = level[j].tail().coeff(static_cast<std::size_t>(d));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

int max_tail_degree(const ShiftOp& op) {
  int deg = -1;
  for (const auto& [k, f] : op.terms()) deg = std::max(deg, f.tail().degree());
  return deg;
}

}  // namespace

std::optional<ShiftOp> reduce_against_basis(const ShiftOp& candidate,
                                            std::span<const ShiftOp> basis) {
  if (candidate.is_zero()) return std::nullopt;
  if (basis.empty()) return candidate;

  RatMat coords = coordinatize(candidate, basis);
  std::size_t cols = basis.size();
  RatMat a(coords.size(), RatRow(cols));
  RatRow b(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = coords[i][j];
    b[i] = coords[i][cols];
  }

  auto [x, consistent] = project_onto_span(a, b);
  if (consistent) return std::nullopt;

  ShiftOp residual = candidate;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!x[j].is_zero()) residual = residual - x[j] * basis[j];
  }
  return residual;
}

ClosureResult lie_closure(const RecurrenceSpec& s, const ClosureOptions& options) {
  require_symbolic(s, "lie_closure");
  require_valid(s);
  if (options.max_dim < 4) throw SpecError("lie_closure: max_dim must be >= 4");
  if (options.max_depth < 2) throw SpecError("lie_closure: max_depth must be >= 2");

  ClosureResult result;
  result.basis = {ShiftOp::identity(), ShiftOp::number(),
                  ShiftOp::raising(), ShiftOp::lowering()};
  std::vector<std::size_t> depth = {0, 0, 0, 0};
  result.growth_log.emplace_back(0, result.basis.size());

  // Every unordered pair (i, j), i < j, is commutated exactly once, in
  // lexicographic order; pairs involving appended elements are picked up as
  // j grows. When j exhausts the basis, every bracket has been reduced to
  // zero against the span, which is the closure certificate.
  for (std::size_t j = 1; j < result.basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      ShiftOp bracket = shiftop_commutator(result.basis[i], result.basis[j], s);
      auto residual = reduce_against_basis(bracket, result.basis);
      if (!residual) continue;

      std::size_t d = std::max(depth[i], depth[j]) + 1;
      if (d > options.max_depth) {
        result.status = ClosureStatus::budget_exceeded;
        result.note = "bracket depth exceeded max_depth=" + std::to_string(options.max_depth);
        result.dim = result.basis.size();
        return result;
      }
      result.basis.push_back(std::move(*residual));
      depth.push_back(d);
      result.depth_reached = std::max(result.depth_reached, d);
      result.growth_log.emplace_back(d, result.basis.size());

      if (result.basis.size() > options.max_dim) {
        result.status = ClosureStatus::budget_exceeded;
        result.note = "basis grew past max_dim=" + std::to_string(options.max_dim);
        result.dim = result.basis.size();
        return result;
      }
      if (max_tail_degree(result.basis.back()) > options.coeff_degree_cap) {
        result.status = ClosureStatus::budget_exceeded;
        result.note = "coefficient tail degree passed the cap of " +
                      std::to_string(options.coeff_degree_cap) +
                      "; unbounded degree growth witnessed";
        result.dim = result.basis.size();
        return result;
      }
    }
  }

  result.status = ClosureStatus::closed;
  result.dim = result.basis.size();
  return result;
}

ClosureResult lie_closure(const RecurrenceSpec& s, std::size_t max_dim, std::size_t max_depth) {
  ClosureOptions options;
  options.max_dim = max_dim;
  options.max_depth = max_depth;
  return lie_closure(s, options);
}

}  // namespace oscalg
