// SPDX-License-Identifier: Apache-2.0

#include "polycalc/linalg.hpp"

namespace polycalc {

namespace {

// Rough size measure for pivot selection: total bit length of num and den.
std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(numerator(q).backend().data(), 2) +
         mpz_sizeinbase(denominator(q).backend().data(), 2);
}

}  // namespace

RrefResult rref_rank(const QMatrix& m) {
  RrefResult res;
  res.rref = m;
  QMatrix& a = res.rref;
  const Index rows = a.rows(), cols = a.cols();

  Index pivot_row = 0;
  for (Index col = 0; col < cols && pivot_row < rows; ++col) {
    // Smallest-bit-length nonzero entry in this column at or below pivot_row.
    Index best = -1;
    std::size_t best_size = 0;
    for (Index r = pivot_row; r < rows; ++r) {
      if (a(r, col) == 0) continue;
      const std::size_t s = bit_size(a(r, col));
      if (best < 0 || s < best_size) {
        best = r;
        best_size = s;
      }
    }
    if (best < 0) continue;
    if (best != pivot_row) a.row(best).swap(a.row(pivot_row));

    const Rational pivot = a(pivot_row, col);
    for (Index c = col; c < cols; ++c) a(pivot_row, c) /= pivot;
    for (Index r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (Index c = col; c < cols; ++c) a(r, c) -= factor * a(pivot_row, c);
    }
    res.pivot_columns.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

std::optional<LinearSystemSolution> solve_linear_system(const QMatrix& m, const QVector& rhs) {
  if (m.rows() != rhs.size()) throw std::invalid_argument("solve_linear_system: row count does not match rhs length");
  const Index n = m.cols();

  QMatrix aug(m.rows(), n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = rhs;
  const RrefResult red = rref_rank(aug);

  // Inconsistent iff some pivot lands in the rhs column.
  for (Index p : red.pivot_columns)
    if (p == n) return std::nullopt;

  LinearSystemSolution sol;
  sol.particular = zero_vector(n);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < red.pivot_columns.size(); ++k) {
    is_pivot[static_cast<std::size_t>(red.pivot_columns[k])] = true;
    sol.particular(red.pivot_columns[k]) = red.rref(static_cast<Index>(k), n);
  }
  for (Index j = 0; j < n; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    QVector basis = zero_vector(n);
    basis(j) = 1;
    for (std::size_t k = 0; k < red.pivot_columns.size(); ++k)
      basis(red.pivot_columns[k]) = -red.rref(static_cast<Index>(k), j);
    sol.nullspace_basis.push_back(std::move(basis));
  }
  return sol;
}

}  // namespace polycalc
