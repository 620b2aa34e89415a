// SPDX-License-Identifier: Apache-2.0
//
// Constructive proper separation of two nonempty polyhedra: a hyperplane
// <v, x> = alpha with sup_P <v, x> <= alpha <= inf_Omega <v, x> and a point
// of Omega strictly above alpha, produced exactly when P misses ri(Omega).

#pragma once

#include "polycalc/polyhedron.hpp"

namespace polycalc {

struct SeparationCertificate {
  QVector v;       // nonzero, |v|_inf <= 1
  Rational alpha;
  // Farkas multipliers for sup_P <v, x> <= alpha.
  QVector farkas_p_ineq;
  QVector farkas_p_eq;
  // Farkas multipliers for inf_Omega <v, x> >= alpha.
  QVector farkas_omega_ineq;
  QVector farkas_omega_eq;
  QVector strict_witness;  // a point of Omega with <v, witness> > alpha
  Rational gap;            // the maximized strict margin at the witness
};

struct SeparationResult {
  std::optional<SeparationCertificate> certificate;  // present iff separable
  std::optional<QVector> not_separable_witness;      // a point of P cap ri(Omega) otherwise
  bool separable() const { return certificate.has_value(); }
};

/// Separates P from Omega properly, with the strict side on Omega.
/// Exactly one branch is filled: a certificate iff P cap ri(Omega) is empty,
/// otherwise a witness point in P cap ri(Omega). Both sets must be nonempty.
SeparationResult properly_separate(const HPolyhedron& p, const HPolyhedron& omega);

/// Re-checks a certificate from scratch with support LPs; tolerates and
/// rejects arbitrary garbage (v = 0, wrong alpha, witness outside Omega).
bool verify_separation_certificate(const HPolyhedron& p, const HPolyhedron& omega, const SeparationCertificate& cert);

}  // namespace polycalc
