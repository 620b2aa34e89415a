// SPDX-License-Identifier: Apache-2.0
//
// Exact two-phase simplex over the rationals. Every outcome carries a
// certificate that verify_lp_certificate can re-check by plain arithmetic:
// optimal points come with dual multipliers, unbounded problems with a
// feasible point and an improving ray, infeasible ones with Farkas
// multipliers.

#pragma once

#include "polycalc/scalars.hpp"

#include <variant>

namespace polycalc {

/// minimize c'x  subject to  A x <= b,  E x = e,  x free.
struct LPProblem {
  QVector c;  // length n
  QMatrix A;  // m x n
  QVector b;  // length m
  QMatrix E;  // k x n
  QVector e;  // length k

  Index num_vars() const { return c.size(); }
  Index num_ineq() const { return A.rows(); }
  Index num_eq() const { return E.rows(); }

  /// Throws std::invalid_argument when dimensions disagree.
  void validate() const;

  static LPProblem minimize(QVector c, QMatrix A, QVector b);
  static LPProblem minimize(QVector c, QMatrix A, QVector b, QMatrix E, QVector e);
};

/// Dual multipliers follow the convention A'lambda + E'nu = -c with
/// lambda >= 0; then c'x = -(b'lambda + e'nu) at an optimum.
struct LPOptimal {
  QVector x;
  QVector ineq_duals;  // lambda >= 0
  QVector eq_duals;    // nu, free
  Rational value;      // c'x
};

struct LPUnbounded {
  QVector feasible_point;  // x0 feasible
  QVector ray;             // A ray <= 0, E ray = 0, c'ray < 0
};

/// lambda'A + mu'E = 0, lambda >= 0, lambda'b + mu'e < 0.
struct LPInfeasible {
  QVector farkas_ineq;  // lambda
  QVector farkas_eq;    // mu
};

using LPOutcome = std::variant<LPOptimal, LPUnbounded, LPInfeasible>;

LPOutcome solve_lp(const LPProblem& p);

/// True iff the outcome's certificate holds for p by exact arithmetic,
/// including complementary slackness and equality of primal and dual
/// objective values in the optimal case.
bool verify_lp_certificate(const LPProblem& p, const LPOutcome& o);

inline const LPOptimal* as_optimal(const LPOutcome& o) { return std::get_if<LPOptimal>(&o); }
inline const LPUnbounded* as_unbounded(const LPOutcome& o) { return std::get_if<LPUnbounded>(&o); }
inline const LPInfeasible* as_infeasible(const LPOutcome& o) { return std::get_if<LPInfeasible>(&o); }

}  // namespace polycalc
