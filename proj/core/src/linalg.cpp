#include "oscalg/linalg.hpp"

#include <cassert>

namespace oscalg {

namespace {

struct Echelon {
  RatMat mat;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form, pivoting only on columns < pivot_limit (columns
// beyond that are carried along as right-hand sides). Pivot selection is the
// first row with a nonzero entry, so the result is deterministic.
Echelon rref(RatMat m, std::size_t pivot_limit) {
  Echelon e;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.mat = std::move(m);
  return e;
}

}  // namespace

Rational determinant(RatMat m) {
  std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<RatRow> nullspace_vector(const RatMat& a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  if (cols == 0) return std::nullopt;
  Echelon e = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == cols) return std::nullopt;
  RatRow v(cols);
  v[free_col] = Rational(1);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    std::size_t pc = e.pivot_cols[r];
    if (pc < free_col) v[pc] = -e.mat[r][free_col];
  }
  // Normalize so the first nonzero entry is 1.
  for (const auto& x : v) {
    if (!x.is_zero()) {
      Rational inv = Rational(1) / x;
      for (auto& y : v) y *= inv;
      break;
    }
  }
  return v;
}

std::pair<RatRow, bool> project_onto_span(const RatMat& a, const RatRow& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  assert(b.size() == rows);
  RatMat aug(rows, RatRow(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  Echelon e = rref(std::move(aug), cols);
  RatRow x(cols);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    x[e.pivot_cols[r]] = e.mat[r][cols];
  }
  // Rows past the pivots have zero coefficients; a nonzero right-hand side
  // there means b is outside the span.
  bool consistent = true;
  for (std::size_t r = e.pivot_cols.size(); r < rows; ++r) {
    if (!e.mat[r][cols].is_zero()) {
      consistent = false;
      break;
    }
  }
  return {std::move(x), consistent};
}

}  // namespace oscalg
