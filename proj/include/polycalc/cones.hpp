// SPDX-License-Identifier: Apache-2.0
//
// Finitely generated cones, normal cones of polyhedra at points, cone
// membership and equality tests with Farkas witnesses, and the certified
// normal cone intersection rule N(x; P cap Omega) = N(x; P) + N(x; Omega).

#pragma once

#include "polycalc/polyhedron.hpp"

#include <vector>

namespace polycalc {

/// cone{g_1, ..., g_k}; no generators means {0}. Generators are nonzero.
struct GeneratedCone {
  Index dim = 0;
  std::vector<QVector> generators;

  static GeneratedCone make(Index dim, std::vector<QVector> generators);
};

/// Normal cone to p at x as the cone of active inequality rows plus both
/// signs of every equality row. Returns nullopt when x is not in p.
std::optional<GeneratedCone> normal_cone_at(const HPolyhedron& p, const QVector& x);

struct ConeMembership {
  bool contained = false;
  QVector multipliers;         // lambda >= 0 with sum lambda_i g_i = v, iff contained
  QVector separating_witness;  // w with <w, g_i> <= 0 and <w, v> > 0, iff not
};

ConeMembership cone_contains(const GeneratedCone& k, const QVector& v);

/// Mutual generator membership; sufficient for finitely generated cones.
bool cone_equal(const GeneratedCone& k1, const GeneratedCone& k2);

/// Cone of the union of both generator lists, which is the Minkowski sum.
GeneratedCone cone_sum(const GeneratedCone& k1, const GeneratedCone& k2);

/// The H-representation of {x : x = sum lambda_i g_i, lambda >= 0},
/// by eliminating the multipliers.
HPolyhedron cone_to_hpolyhedron(const GeneratedCone& k);

/// For a cone in R^(head + tail.size()), the H-representation of
/// {u in R^head : (u, tail) in k}. Used for subdifferential and
/// coderivative slices of graph/epigraph normal cones.
HPolyhedron cone_slice(const GeneratedCone& k, Index head, const QVector& tail);

struct NormalDecomposition {
  QVector target;     // a generator of N(x; P cap Omega)
  QVector part_p;     // component in N(x; P)
  QVector part_omega; // component in N(x; Omega)
  QVector multipliers;
};

struct IntersectionRuleReport {
  bool qualification_holds = false;  // P cap ri(Omega) nonempty
  bool rule_holds = false;           // cone equality
  GeneratedCone cone_intersection;   // N(x; P cap Omega)
  GeneratedCone cone_sum;            // N(x; P) + N(x; Omega)
  std::vector<NormalDecomposition> decompositions;
};

/// Checks the normal cone intersection rule at a common point. The easy
/// inclusion N(x;P) + N(x;Omega) subset N(x;P cap Omega) is verified
/// unconditionally and a violation throws std::logic_error.
IntersectionRuleReport normal_intersection_rule(const HPolyhedron& p, const HPolyhedron& omega, const QVector& x);

}  // namespace polycalc
