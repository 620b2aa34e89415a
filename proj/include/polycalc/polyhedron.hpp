// SPDX-License-Identifier: Apache-2.0
//
// H-polyhedra {x : A x <= b, E x = e} and their exact geometry: emptiness
// with Farkas certificates, membership, implicit equalities, relative
// interior points, Fourier-Motzkin projection, redundancy removal,
// Minkowski sums, affine images and preimages.

#pragma once

#include "polycalc/lp.hpp"

#include <vector>

namespace polycalc {

class HPolyhedron {
 public:
  /// The whole space R^n.
  explicit HPolyhedron(Index nel);

  /// Builds {x : A x <= b, E x = e}. Zero rows with a nonnegative right-hand
  /// side are dropped; contradictory zero rows are kept, which makes the set
  /// empty. Either block may have zero rows.
  static HPolyhedron make(Index n, QMatrix A, QVector b, QMatrix E, QVector e);
  static HPolyhedron make(Index n, QMatrix A, QVector b);

  Index dim() const { return n_; }
  Index num_ineq() const { return A_.rows(); }
  Index num_eq() const { return E_.rows(); }
  const QMatrix& A() const { return A_; }
  const QVector& b() const { return b_; }
  const QMatrix& E() const { return E_; }
  const QVector& e() const { return e_; }

  bool contains_point(const QVector& x) const;

  /// Indices of inequality rows tight at x. Requires x in the set.
  std::vector<Index> active_rows(const QVector& x) const;

 private:
  HPolyhedron(Index n, QMatrix A, QVector b, QMatrix E, QVector e)
      : n_(n), A_(std::move(A)), b_(std::move(b)), E_(std::move(E)), e_(std::move(e)) {}

  Index n_;
  QMatrix A_;
  QVector b_;
  QMatrix E_;
  QVector e_;
};

/// {x in R^n : 0 <= -1}, the canonical empty set.
HPolyhedron empty_polyhedron(Index n);

struct FarkasCertificate {
  QVector ineq_multipliers;  // lambda >= 0
  QVector eq_multipliers;    // mu
};

struct EmptinessReport {
  bool empty = false;
  std::optional<FarkasCertificate> farkas;  // present iff empty
};

EmptinessReport is_empty(const HPolyhedron& p);

/// Maximizes <w, x> over p (an LP outcome of minimizing -w).
LPOutcome maximize_over(const HPolyhedron& p, const QVector& w);

/// Any feasible point, or nullopt when the set is empty.
std::optional<QVector> find_point(const HPolyhedron& p);

struct RelativeInteriorReport {
  std::vector<Index> implicit_equality_rows;
  Index affine_dim = 0;
  QVector ri_point;
  // For each non-implicit inequality row, a feasible point with strict slack.
  std::vector<std::pair<Index, QVector>> strict_witnesses;
};

/// Detects implicit equalities row by row (max-slack LPs), computes the
/// affine dimension and produces a relative interior point. Requires p
/// nonempty.
RelativeInteriorReport implicit_equalities_report(const HPolyhedron& p);

/// A point with strict slack on every non-implicit inequality. Requires p
/// nonempty.
QVector relative_interior_point(const HPolyhedron& p);

bool contains_point_ri(const HPolyhedron& p, const QVector& x);

/// Exact projection onto the first `keep` coordinates by Fourier-Motzkin
/// elimination, with per-round redundancy pruning.
HPolyhedron project_fm(const HPolyhedron& p, Index keep);

/// Drops inequalities that cannot change the set (per-row LP tests).
HPolyhedron remove_redundant(const HPolyhedron& p);

HPolyhedron minkowski_sum(const HPolyhedron& p, const HPolyhedron& q);

/// {M x + shift : x in p}; M has dim(p) columns.
HPolyhedron affine_image(const HPolyhedron& p, const QMatrix& m, const QVector& shift);

/// {x : M x in p}.
HPolyhedron affine_preimage(const HPolyhedron& p, const QMatrix& m);

HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& q);

/// Same constraints on coordinates [offset, offset + dim(p)) of R^total.
HPolyhedron embed(const HPolyhedron& p, Index total, Index offset);

/// Set containment / equality decided by per-row support LPs.
bool hpoly_contains(const HPolyhedron& inner, const HPolyhedron& outer);
bool hpoly_equal(const HPolyhedron& p, const HPolyhedron& q);

/// Decides whether {z in c : M z in ri(d)} is nonempty and returns a witness
/// z. This is the common shape of all the qualification conditions.
std::optional<QVector> meets_relative_interior(const HPolyhedron& c, const HPolyhedron& d, const QMatrix& m);

}  // namespace polycalc
