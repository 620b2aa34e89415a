// SPDX-License-Identifier: Apache-2.0
//
// Support functions, Fenchel conjugates, infimal convolutions, the
// intersection/sum/chain rules for conjugates, and the Fenchel duality
// solver with attainment certificates. All values are exact; +inf and -inf
// encode infeasibility and unboundedness of the underlying LPs.

#pragma once

#include "polycalc/functions.hpp"

namespace polycalc {

struct ConjugateValue {
  ExtendedRational value;
  std::optional<QVector> maximizer;      // present iff the sup is attained at a point
  std::optional<QVector> unbounded_ray;  // present iff value = +inf by recession
};

/// sigma_Omega(xstar) = sup{<xstar, x> : x in Omega}; Omega must be nonempty.
ConjugateValue support_eval(const HPolyhedron& omega, const QVector& xstar);

/// f*(xstar) = sup <xstar, x> - f(x), evaluated as the support function of
/// the epigraph at (xstar, -1). Never -inf for proper f.
ConjugateValue conjugate_eval(const PolyhedralFunction& f, const QVector& xstar);

/// f**(x) through the multiplier encoding of epi f*; equals f(x) for the
/// proper polyhedral functions handled here.
ExtendedRational biconjugate_eval(const PolyhedralFunction& f, const QVector& x);

struct SupportSplit {
  Rational value;   // sigma_{P cap Omega}(xstar)
  QVector xstar_p;      // summand with sigma_P(xstar_p) = part_p
  QVector xstar_omega;
  Rational part_p;
  Rational part_omega;
  bool qualification_holds = false;  // P cap ri(Omega) nonempty
};

/// sigma_{P cap Omega}(xstar) = sigma_P(x1) + sigma_Omega(x2) with
/// x1 + x2 = xstar, extracted from the optimal duals of one LP. For
/// polyhedral data the split exists whenever the value is finite, with or
/// without the ri-qualification; the flag records whether it held.
/// Throws when the intersection is empty or the value is +inf.
SupportSplit support_intersection_rule(const HPolyhedron& p, const HPolyhedron& omega, const QVector& xstar);

struct ConjugateSumResult {
  ExtendedRational value;  // (f+g)*(xstar); +inf reported without a split
  std::optional<QVector> xstar_f;
  std::optional<QVector> xstar_g;
  std::optional<Rational> part_f;  // f*(xstar_f)
  std::optional<Rational> part_g;  // g*(xstar_g)
};

/// (f+g)*(xstar) = f*(x1) + g*(x2), x1 + x2 = xstar, infimum attained.
/// Requires dom f cap ri(dom g) nonempty.
ConjugateSumResult conjugate_sum_rule(const PolyhedralFunction& f, const PolyhedralFunction& g,
                                      const QVector& xstar);

struct ConjugateChainResult {
  ExtendedRational value;          // (g o A)*(xstar)
  std::optional<QVector> ystar;    // A'ystar = xstar and g*(ystar) = value, iff finite
};

/// (g o A)*(xstar) = min{g*(ystar) : A'ystar = xstar}, attained when finite.
/// Requires the range of A to meet dom g.
ConjugateChainResult conjugate_chain_rule(const PolyhedralFunction& g, const QMatrix& a, const QVector& xstar);

struct InfConvResult {
  ExtendedRational value;  // inf{f(u) + g(v) : u + v = x}
  std::optional<QVector> split_u;
  std::optional<QVector> split_v;
};

InfConvResult infimal_convolution_eval(const PolyhedralFunction& f, const PolyhedralFunction& g, const QVector& x);

struct DualityValues {
  ExtendedRational p_hat;  // inf f(x) + g(Ax)
  ExtendedRational d_hat;  // sup -f*(A'y) - g*(-y)
};

/// Computes both optimal values from the composite primal LP and the
/// explicit dual LP over conjugate multipliers, and checks p_hat >= d_hat.
DualityValues weak_duality_gap(const PolyhedralFunction& f, const PolyhedralFunction& g, const QMatrix& a);

struct DualityCertificate {
  ExtendedRational p_hat;
  ExtendedRational d_hat;
  std::optional<QVector> primal_x;  // attains p_hat, iff finite
  std::optional<QVector> dual_y;    // attains d_hat, iff finite
  // Both values are finite and coincide (strong duality with attainment
  // on both sides).
  bool equality = false;
  bool qualification_holds = false;        // dom(g o A) meets ri(dom f)
  bool image_qualification_holds = false;  // dom g meets A(ri(dom f))
};

/// Full Fenchel duality run for  min f(x) + g(Ax). Degenerate outcomes are
/// encoded in the certificate rather than thrown.
DualityCertificate fenchel_solve(const PolyhedralFunction& f, const PolyhedralFunction& g, const QMatrix& a);

}  // namespace polycalc
