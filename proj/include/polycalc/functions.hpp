// SPDX-License-Identifier: Apache-2.0
//
// Polyhedral functions f(x) = max_i <c_i, x> + d_i on a polyhedral domain,
// +inf outside. Evaluation, epigraphs, subdifferentials through the
// epigraph normal cone, and the subdifferential sum and chain rules as
// certified set computations.

#pragma once

#include "polycalc/cones.hpp"

#include <vector>

namespace polycalc {

struct AffinePiece {
  QVector slope;
  Rational offset;
};

class PolyhedralFunction {
 public:
  /// Requires at least one piece and a nonempty domain (properness).
  static PolyhedralFunction make(Index n, std::vector<AffinePiece> pieces, HPolyhedron domain);

  /// max-affine over the whole space.
  static PolyhedralFunction max_affine(Index n, std::vector<AffinePiece> pieces);

  /// The indicator of a nonempty polyhedron: 0 on it, +inf outside.
  static PolyhedralFunction indicator(HPolyhedron domain);

  Index dim() const { return n_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const HPolyhedron& domain() const { return domain_; }

  ExtendedRational eval(const QVector& x) const;

  /// Indices of pieces attaining the max at x; requires x in the domain.
  std::vector<std::size_t> active_pieces(const QVector& x) const;

 private:
  PolyhedralFunction(Index n, std::vector<AffinePiece> pieces, HPolyhedron domain)
      : n_(n), pieces_(std::move(pieces)), domain_(std::move(domain)) {}

  Index n_;
  std::vector<AffinePiece> pieces_;
  HPolyhedron domain_;
};

/// {(x, t) : <c_i, x> + d_i <= t for all i, x in dom f} in dimension n+1.
HPolyhedron epigraph(const PolyhedralFunction& f);

/// The sum, with all pairwise piece sums over the intersected domain.
/// Throws when the domains do not intersect (the sum would be improper).
PolyhedralFunction sum(const PolyhedralFunction& f1, const PolyhedralFunction& f2);

/// f(A x) with pieces (A'c_i, d_i) over the preimage of dom f. Throws when
/// the range of A misses dom f (the composition would be improper).
PolyhedralFunction compose_linear(const PolyhedralFunction& f, const QMatrix& a);

/// The subdifferential at a domain point as an explicit H-polyhedron:
/// {x* : (x*, -1) in N((x, f(x)); epi f)}.
HPolyhedron subdifferential_at(const PolyhedralFunction& f, const QVector& x);

/// Independent route: conv{active slopes} + N(x; dom f).
HPolyhedron subdifferential_via_active_pieces(const PolyhedralFunction& f, const QVector& x);

struct SubdiffSumReport {
  bool qualification_holds = false;  // dom f1 meets ri(dom f2)
  bool rule_holds = false;
  HPolyhedron left;   // subdifferential of f1 + f2
  HPolyhedron right;  // Minkowski sum of the two subdifferentials
};

/// Checks d(f1+f2)(x) = df1(x) + df2(x). The inclusion right into left is
/// verified unconditionally; a violation throws std::logic_error.
SubdiffSumReport subdiff_sum_rule_check(const PolyhedralFunction& f1, const PolyhedralFunction& f2,
                                        const QVector& x);

struct SubdiffChainReport {
  bool rule_holds = false;
  HPolyhedron left;   // subdifferential of f o A at x
  HPolyhedron right;  // A' applied to the subdifferential of f at A x
};

/// Checks d(f o A)(x) = A'(df(A x)); requires A x in dom f.
SubdiffChainReport subdiff_chain_rule(const PolyhedralFunction& f, const QMatrix& a, const QVector& x);

}  // namespace polycalc
