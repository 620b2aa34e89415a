// SPDX-License-Identifier: Apache-2.0

#include "polycalc/separation.hpp"

#include "polycalc/errors.hpp"

namespace polycalc {

namespace {

QMatrix identity_matrix(Index n) {
  QMatrix m = zero_matrix(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace

SeparationResult properly_separate(const HPolyhedron& p, const HPolyhedron& omega) {
  if (p.dim() != omega.dim()) throw std::invalid_argument("properly_separate: dimension mismatch");
  if (is_empty(p).empty || is_empty(omega).empty)
    throw InfeasibleError("properly_separate: both sets must be nonempty");
  const Index n = p.dim();
  const Index mp = p.num_ineq(), kp = p.num_eq();
  const Index mo = omega.num_ineq(), ko = omega.num_eq();

  const QVector y0 = relative_interior_point(omega);

  // Variables: v (n), alpha, t, lambda_P (mp), nu_P (kp), lambda_O (mo), nu_O (ko).
  const Index ov = 0, oa = n, ot = n + 1, olp = n + 2, onp = olp + mp, olo = onp + kp, ono = olo + mo;
  const Index nz = ono + ko;

  // Farkas encodings of "sup_P <v,x> <= alpha" and "inf_Omega <v,x> >= alpha".
  QMatrix eqm = zero_matrix(2 * n, nz);
  QVector eqv = zero_vector(2 * n);
  for (Index i = 0; i < n; ++i) {
    eqm(i, ov + i) = 1;
    for (Index r = 0; r < mp; ++r) eqm(i, olp + r) = -p.A()(r, i);
    for (Index r = 0; r < kp; ++r) eqm(i, onp + r) = -p.E()(r, i);
    eqm(n + i, ov + i) = 1;
    for (Index r = 0; r < mo; ++r) eqm(n + i, olo + r) = omega.A()(r, i);
    for (Index r = 0; r < ko; ++r) eqm(n + i, ono + r) = omega.E()(r, i);
  }

  const Index mrows = 2 + 1 + 2 * n + mp + mo;
  QMatrix a = zero_matrix(mrows, nz);
  QVector b = zero_vector(mrows);
  Index r = 0;
  // b_P'lambda_P + e_P'nu_P - alpha <= 0
  for (Index i = 0; i < mp; ++i) a(r, olp + i) = p.b()(i);
  for (Index i = 0; i < kp; ++i) a(r, onp + i) = p.e()(i);
  a(r, oa) = -1;
  ++r;
  // alpha + b_O'lambda_O + e_O'nu_O <= 0
  a(r, oa) = 1;
  for (Index i = 0; i < mo; ++i) a(r, olo + i) = omega.b()(i);
  for (Index i = 0; i < ko; ++i) a(r, ono + i) = omega.e()(i);
  ++r;
  // t - <v, y0> + alpha <= 0
  a(r, ot) = 1;
  for (Index i = 0; i < n; ++i) a(r, ov + i) = -y0(i);
  a(r, oa) = 1;
  ++r;
  // |v|_inf <= 1
  for (Index i = 0; i < n; ++i, ++r) {
    a(r, ov + i) = 1;
    b(r) = 1;
  }
  for (Index i = 0; i < n; ++i, ++r) {
    a(r, ov + i) = -1;
    b(r) = 1;
  }
  // lambda >= 0
  for (Index i = 0; i < mp; ++i, ++r) a(r, olp + i) = -1;
  for (Index i = 0; i < mo; ++i, ++r) a(r, olo + i) = -1;

  QVector obj = zero_vector(nz);
  obj(ot) = -1;  // maximize t
  const LPOutcome out = solve_lp(LPProblem::minimize(obj, a, b, eqm, eqv));
  const auto* opt = as_optimal(out);
  if (opt == nullptr) throw std::logic_error("properly_separate: margin LP must have an optimum");
  const Rational margin = -opt->value;

  SeparationResult res;
  if (margin > 0) {
    SeparationCertificate cert;
    cert.v = opt->x.segment(ov, n);
    cert.alpha = opt->x(oa);
    cert.farkas_p_ineq = opt->x.segment(olp, mp);
    cert.farkas_p_eq = opt->x.segment(onp, kp);
    cert.farkas_omega_ineq = opt->x.segment(olo, mo);
    cert.farkas_omega_eq = opt->x.segment(ono, ko);
    cert.strict_witness = y0;
    cert.gap = margin;
    if (!verify_separation_certificate(p, omega, cert))
      throw std::logic_error("properly_separate: produced certificate fails verification");
    res.certificate = std::move(cert);
    return res;
  }

  const auto witness = meets_relative_interior(p, omega, identity_matrix(n));
  if (!witness)
    throw std::logic_error("properly_separate: zero margin but P misses ri(Omega)");
  res.not_separable_witness = *witness;
  return res;
}

bool verify_separation_certificate(const HPolyhedron& p, const HPolyhedron& omega,
                                   const SeparationCertificate& cert) {
  const Index n = p.dim();
  if (omega.dim() != n || cert.v.size() != n) return false;
  if (is_zero_vector(cert.v)) return false;

  // sup_P <v, x> <= alpha, by LP.
  {
    const LPOutcome out = maximize_over(p, cert.v);
    if (as_unbounded(out) != nullptr) return false;
    if (const auto* opt = as_optimal(out)) {
      if (-opt->value > cert.alpha) return false;
    }
  }
  // inf_Omega <v, x> >= alpha, by LP.
  {
    const LPOutcome out = maximize_over(omega, QVector(-cert.v));
    if (as_unbounded(out) != nullptr) return false;
    if (const auto* opt = as_optimal(out)) {
      if (-opt->value > -cert.alpha) return false;
    }
  }
  // Strict point of Omega above alpha.
  if (cert.strict_witness.size() != n || !omega.contains_point(cert.strict_witness)) return false;
  Rational at = 0;
  for (Index i = 0; i < n; ++i) at += cert.v(i) * cert.strict_witness(i);
  if (at <= cert.alpha) return false;

  // Stored Farkas multipliers must reproduce both bounds arithmetically.
  if (cert.farkas_p_ineq.size() != p.num_ineq() || cert.farkas_p_eq.size() != p.num_eq()) return false;
  if (cert.farkas_omega_ineq.size() != omega.num_ineq() || cert.farkas_omega_eq.size() != omega.num_eq())
    return false;
  for (Index i = 0; i < p.num_ineq(); ++i)
    if (cert.farkas_p_ineq(i) < 0) return false;
  for (Index i = 0; i < omega.num_ineq(); ++i)
    if (cert.farkas_omega_ineq(i) < 0) return false;
  for (Index j = 0; j < n; ++j) {
    Rational sp = 0, so = 0;
    for (Index i = 0; i < p.num_ineq(); ++i) sp += p.A()(i, j) * cert.farkas_p_ineq(i);
    for (Index i = 0; i < p.num_eq(); ++i) sp += p.E()(i, j) * cert.farkas_p_eq(i);
    if (sp != cert.v(j)) return false;
    for (Index i = 0; i < omega.num_ineq(); ++i) so += omega.A()(i, j) * cert.farkas_omega_ineq(i);
    for (Index i = 0; i < omega.num_eq(); ++i) so += omega.E()(i, j) * cert.farkas_omega_eq(i);
    if (so != -cert.v(j)) return false;
  }
  Rational bound_p = 0, bound_o = 0;
  for (Index i = 0; i < p.num_ineq(); ++i) bound_p += p.b()(i) * cert.farkas_p_ineq(i);
  for (Index i = 0; i < p.num_eq(); ++i) bound_p += p.e()(i) * cert.farkas_p_eq(i);
  for (Index i = 0; i < omega.num_ineq(); ++i) bound_o += omega.b()(i) * cert.farkas_omega_ineq(i);
  for (Index i = 0; i < omega.num_eq(); ++i) bound_o += omega.e()(i) * cert.farkas_omega_eq(i);
  return bound_p <= cert.alpha && bound_o <= -cert.alpha;
}

}  // namespace polycalc
