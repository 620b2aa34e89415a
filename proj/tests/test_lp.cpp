// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "polycalc/lp.hpp"
#include "test_util.hpp"

#include <random>

using namespace polycalc;
using namespace polycalc::testutil;

TEST_CASE("single constraint optimum with dual") {
  // min -x s.t. x <= 1
  const auto p = LPProblem::minimize(vec({-1}), mat({{1}}), vec({1}));
  const auto out = solve_lp(p);
  const auto* opt = as_optimal(out);
  REQUIRE(opt != nullptr);
  CHECK(opt->x == vec({1}));
  CHECK(opt->value == -1);
  CHECK(opt->ineq_duals == vec({1}));
  CHECK(verify_lp_certificate(p, out));

  LPOutcome tampered = LPOptimal{opt->x, opt->ineq_duals, opt->eq_duals, Rational(-2)};
  CHECK_FALSE(verify_lp_certificate(p, tampered));
}

TEST_CASE("unbounded ray") {
  // min -x s.t. -x <= 0
  const auto p = LPProblem::minimize(vec({-1}), mat({{-1}}), vec({0}));
  const auto out = solve_lp(p);
  const auto* ub = as_unbounded(out);
  REQUIRE(ub != nullptr);
  CHECK(ub->feasible_point == vec({0}));
  CHECK(ub->ray(0) > 0);
  CHECK(verify_lp_certificate(p, out));
}

TEST_CASE("infeasible system yields a Farkas certificate") {
  // x <= -1 and -x <= 0 cannot both hold
  const auto p = LPProblem::minimize(vec({0}), mat({{1}, {-1}}), vec({-1, 0}));
  const auto out = solve_lp(p);
  const auto* inf = as_infeasible(out);
  REQUIRE(inf != nullptr);
  Rational combo = inf->farkas_ineq(0) * (-1) + inf->farkas_ineq(1) * 0;
  CHECK(combo < 0);
  CHECK(verify_lp_certificate(p, out));
}

TEST_CASE("equality constraints and free variables") {
  // min x1 + x2 s.t. x1 + x2 = 3, x1 - x2 <= 1
  const auto p = LPProblem::minimize(vec({1, 1}), mat({{1, -1}}), vec({1}), mat({{1, 1}}), vec({3}));
  const auto out = solve_lp(p);
  const auto* opt = as_optimal(out);
  REQUIRE(opt != nullptr);
  CHECK(opt->value == 3);
  CHECK(verify_lp_certificate(p, out));
}

TEST_CASE("degenerate problem still terminates (Bland)") {
  // Several redundant active constraints through the optimum.
  const auto p = LPProblem::minimize(
      vec({-1, -1}),
      mat({{1, 0}, {0, 1}, {1, 1}, {2, 2}, {1, 2}, {2, 1}}),
      vec({1, 1, 2, 4, 3, 3}));
  const auto out = solve_lp(p);
  const auto* opt = as_optimal(out);
  REQUIRE(opt != nullptr);
  CHECK(opt->value == -2);
  CHECK(verify_lp_certificate(p, out));
}

TEST_CASE("no constraints at all") {
  auto out = solve_lp(LPProblem::minimize(vec({0, 0}), empty_rows(2), vec({})));
  CHECK(as_optimal(out) != nullptr);
  out = solve_lp(LPProblem::minimize(vec({1, 0}), empty_rows(2), vec({})));
  CHECK(as_unbounded(out) != nullptr);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(LPProblem::minimize(vec({1, 2}), mat({{1}}), vec({1})), std::invalid_argument);
}

TEST_CASE("random LPs: certificates verify and duality is exact") {
  std::mt19937_64 rng(20250811);
  int optimal_seen = 0, unbounded_seen = 0, infeasible_seen = 0;
  for (int it = 0; it < 200; ++it) {
    const Index n = 1 + static_cast<Index>(rng() % 4);
    const Index m = 1 + static_cast<Index>(rng() % 6);
    const Index k = static_cast<Index>(rng() % 2);
    QMatrix a(m, n), eq(k, n);
    QVector b(m), e(k), c(n);
    for (Index j = 0; j < n; ++j) c(j) = static_cast<long>(rng() % 11) - 5;
    for (Index i = 0; i < m; ++i) {
      b(i) = static_cast<long>(rng() % 11) - 5;
      for (Index j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng() % 11) - 5;
    }
    for (Index i = 0; i < k; ++i) {
      e(i) = static_cast<long>(rng() % 7) - 3;
      for (Index j = 0; j < n; ++j) eq(i, j) = static_cast<long>(rng() % 7) - 3;
    }
    const auto p = LPProblem::minimize(c, a, b, eq, e);
    const auto out = solve_lp(p);
    CHECK(verify_lp_certificate(p, out));
    if (const auto* opt = as_optimal(out)) {
      ++optimal_seen;
      Rational dual = 0;
      for (Index i = 0; i < m; ++i) dual += b(i) * opt->ineq_duals(i);
      for (Index i = 0; i < k; ++i) dual += e(i) * opt->eq_duals(i);
      CHECK(opt->value == -dual);
    } else if (as_unbounded(out)) {
      ++unbounded_seen;
    } else {
      ++infeasible_seen;
    }
  }
  // The generator should hit all three outcome kinds.
  CHECK(optimal_seen > 0);
  CHECK(unbounded_seen > 0);
  CHECK(infeasible_seen > 0);
}
