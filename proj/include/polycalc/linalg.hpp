// SPDX-License-Identifier: Apache-2.0
//
// Exact Gaussian elimination: reduced row echelon form, rank, and linear
// system solving with a nullspace basis.

#pragma once

#include "polycalc/scalars.hpp"

#include <vector>

namespace polycalc {

struct RrefResult {
  QMatrix rref;
  Index rank = 0;
  std::vector<Index> pivot_columns;
};

/// Unique reduced row echelon form. Pivot selection prefers entries of small
/// bit length within the current column; the result does not depend on it.
RrefResult rref_rank(const QMatrix& m);

struct LinearSystemSolution {
  QVector particular;                 // M * particular == rhs
  std::vector<QVector> nullspace_basis;  // spans ker(M)
};

/// Solves M x = rhs exactly. Returns nullopt when rhs is not in range(M).
/// The particular solution has all free variables at zero.
std::optional<LinearSystemSolution> solve_linear_system(const QMatrix& m, const QVector& rhs);

}  // namespace polycalc
