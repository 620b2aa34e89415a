// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "polycalc/conjugate.hpp"
#include "polycalc/errors.hpp"
#include "polycalc/generator.hpp"
#include "test_util.hpp"

using namespace polycalc;
using namespace polycalc::testutil;

namespace {

PolyhedralFunction abs1() {
  return PolyhedralFunction::max_affine(1, {AffinePiece{vec({1}), 0}, AffinePiece{vec({-1}), 0}});
}

PolyhedralFunction zero_indicator() {
  return PolyhedralFunction::indicator(HPolyhedron::make(1, empty_rows(1), vec({}), mat({{1}}), vec({0})));
}

PolyhedralFunction linear1() {
  return PolyhedralFunction::max_affine(1, {AffinePiece{vec({1}), 0}});
}

QMatrix id1() { return mat({{1}}); }

}  // namespace

TEST_CASE("support function values") {
  const auto box2 = HPolyhedron::make(2, mat({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), vec({1, 0, 1, 0}));
  const auto at_corner = support_eval(box2, vec({1, 1}));
  CHECK(at_corner.value == ExtendedRational(2));
  REQUIRE(at_corner.maximizer.has_value());
  CHECK(*at_corner.maximizer == vec({1, 1}));

  const auto unbounded = support_eval(HPolyhedron(1), vec({1}));
  CHECK(unbounded.value.is_plus_infinity());
  REQUIRE(unbounded.unbounded_ray.has_value());
  CHECK((*unbounded.unbounded_ray)(0) > 0);

  const auto origin = HPolyhedron::make(1, empty_rows(1), vec({}), mat({{1}}), vec({0}));
  CHECK(support_eval(origin, vec({-7})).value == ExtendedRational(0));

  CHECK_THROWS_AS(support_eval(empty_polyhedron(1), vec({1})), std::invalid_argument);
}

TEST_CASE("conjugate of the absolute value") {
  const auto f = abs1();
  const auto inside = conjugate_eval(f, vec({Rational(1, 2)}));
  CHECK(inside.value == ExtendedRational(0));
  REQUIRE(inside.maximizer.has_value());
  CHECK(*inside.maximizer == vec({0}));

  const auto outside = conjugate_eval(f, vec({2}));
  CHECK(outside.value.is_plus_infinity());
  REQUIRE(outside.unbounded_ray.has_value());
  CHECK((*outside.unbounded_ray)(0) > 0);

  for (long q = -3; q <= 3; ++q)
    CHECK(conjugate_eval(zero_indicator(), vec({q})).value == ExtendedRational(0));
}

TEST_CASE("support intersection rule splits through LP duals") {
  const auto p = HPolyhedron::make(2, mat({{1, 0}}), vec({0}));
  const auto omega = HPolyhedron::make(2, mat({{0, 1}}), vec({0}));
  const auto split = support_intersection_rule(p, omega, vec({1, 1}));
  CHECK(split.value == 0);
  CHECK(split.qualification_holds);
  CHECK(QVector(split.xstar_p + split.xstar_omega) == vec({1, 1}));
  CHECK(split.part_p + split.part_omega == 0);

  const auto box = HPolyhedron::make(1, mat({{1}, {-1}}), vec({1, 0}));
  const auto same = support_intersection_rule(box, box, vec({1}));
  CHECK(same.value == 1);

  const auto left = HPolyhedron::make(1, mat({{1}, {-1}}), vec({0, 1}));
  const auto right = HPolyhedron::make(1, mat({{1}, {-1}}), vec({1, 0}));
  // Intervals touching at a single boundary point: the ri-qualification
  // fails but the polyhedral split still exists and certifies.
  const auto pin = support_intersection_rule(left, right, vec({1}));
  CHECK(pin.value == 0);
  CHECK_FALSE(pin.qualification_holds);
  CHECK(pin.part_p + pin.part_omega == 0);
  CHECK(QVector(pin.xstar_p + pin.xstar_omega) == vec({1}));

  CHECK_THROWS_AS(support_intersection_rule(HPolyhedron::make(1, mat({{1}}), vec({-1})),
                                            HPolyhedron::make(1, mat({{-1}}), vec({-1})), vec({1})),
                  InfeasibleError);
}

TEST_CASE("conjugate sum rule worked examples") {
  const auto f = PolyhedralFunction::indicator(HPolyhedron::make(1, mat({{-1}}), vec({0})));  // [0, inf)
  const auto res = conjugate_sum_rule(f, abs1(), vec({1}));
  CHECK(res.value == ExtendedRational(0));
  CHECK(QVector(*res.xstar_f + *res.xstar_g) == vec({1}));
  CHECK(*res.part_f + *res.part_g == 0);

  const auto zero = PolyhedralFunction::max_affine(1, {AffinePiece{vec({0}), 0}});
  const auto with_zero = conjugate_sum_rule(abs1(), zero, vec({1}));
  CHECK(with_zero.value == conjugate_eval(abs1(), vec({1})).value);

  const auto both = conjugate_sum_rule(zero_indicator(), zero_indicator(), vec({2}));
  CHECK(both.value == ExtendedRational(0));
}

TEST_CASE("conjugate sum rule requires the qualification") {
  const auto left = PolyhedralFunction::indicator(HPolyhedron::make(1, mat({{1}}), vec({0})));   // (-inf, 0]
  const auto right = PolyhedralFunction::indicator(HPolyhedron::make(1, mat({{-1}}), vec({0})));  // [0, inf)
  // dom left cap ri(dom right) = (-inf,0] cap (0,inf) is empty.
  CHECK_THROWS_AS(conjugate_sum_rule(left, right, vec({0})), QualificationError);
}

TEST_CASE("conjugate chain rule worked examples") {
  const auto g = abs1();
  const auto a = mat({{1, 1}});
  const auto solvable = conjugate_chain_rule(g, a, vec({1, 1}));
  CHECK(solvable.value == ExtendedRational(0));
  REQUIRE(solvable.ystar.has_value());
  CHECK(*solvable.ystar == vec({1}));

  const auto unsolvable = conjugate_chain_rule(g, a, vec({1, 0}));
  CHECK(unsolvable.value.is_plus_infinity());
  CHECK_FALSE(unsolvable.ystar.has_value());

  const auto ident = conjugate_chain_rule(g, id1(), vec({Rational(1, 2)}));
  CHECK(ident.value == conjugate_eval(g, vec({Rational(1, 2)})).value);
  CHECK(*ident.ystar == vec({Rational(1, 2)}));
}

TEST_CASE("infimal convolutions") {
  const auto f = abs1();
  for (long x = -2; x <= 2; ++x) {
    const auto res = infimal_convolution_eval(f, zero_indicator(), vec({x}));
    CHECK(res.value == ExtendedRational(Rational(x < 0 ? -x : x)));
  }
  const auto ray = PolyhedralFunction::indicator(HPolyhedron::make(1, mat({{-1}}), vec({0})));
  const auto split = infimal_convolution_eval(ray, ray, vec({1}));
  CHECK(split.value == ExtendedRational(0));
  CHECK(QVector(*split.split_u + *split.split_v) == vec({1}));
  const auto two = infimal_convolution_eval(f, f, vec({2}));
  CHECK(two.value == ExtendedRational(2));
  CHECK(QVector(*two.split_u + *two.split_v) == vec({2}));
}

TEST_CASE("duality values on the worked instances") {
  // min |x| + x has value 0, attained in the dual at y* = -1.
  const auto vals = weak_duality_gap(abs1(), linear1(), id1());
  CHECK(vals.p_hat == ExtendedRational(0));
  CHECK(vals.d_hat == ExtendedRational(0));

  const auto both_zero = weak_duality_gap(zero_indicator(), zero_indicator(), id1());
  CHECK(both_zero.p_hat == ExtendedRational(0));
  CHECK(both_zero.d_hat == ExtendedRational(0));
}

TEST_CASE("disjoint indicators: infeasible primal, unbounded dual") {
  // f = indicator of (-inf, -1], g = indicator of [1, inf), A = 1. The
  // primal is infeasible. The dual objective -f*(y) - g*(-y) equals 2y for
  // y >= 0 (check y = 1 by hand: f*(1) = -1, g*(-1) = -1), so the dual LP
  // is unbounded and d_hat = +inf.
  const auto f = PolyhedralFunction::indicator(HPolyhedron::make(1, mat({{1}}), vec({-1})));
  const auto g = PolyhedralFunction::indicator(HPolyhedron::make(1, mat({{-1}}), vec({-1})));
  CHECK(conjugate_eval(f, vec({1})).value == ExtendedRational(-1));
  CHECK(conjugate_eval(g, vec({-1})).value == ExtendedRational(-1));
  const auto vals = weak_duality_gap(f, g, id1());
  CHECK(vals.p_hat.is_plus_infinity());
  CHECK(vals.d_hat.is_plus_infinity());

  const auto cert = fenchel_solve(f, g, id1());
  CHECK_FALSE(cert.qualification_holds);
  CHECK_FALSE(cert.equality);
  CHECK_FALSE(cert.primal_x.has_value());
  CHECK_FALSE(cert.dual_y.has_value());
}

TEST_CASE("fenchel_solve attains the dual on qualified instances") {
  const auto cert = fenchel_solve(abs1(), linear1(), id1());
  CHECK(cert.qualification_holds);
  CHECK(cert.equality);
  CHECK(cert.p_hat == ExtendedRational(0));
  REQUIRE(cert.dual_y.has_value());
  CHECK(*cert.dual_y == vec({-1}));

  const auto trivial = fenchel_solve(zero_indicator(), zero_indicator(), id1());
  CHECK(trivial.p_hat == ExtendedRational(0));
  CHECK(trivial.d_hat == ExtendedRational(0));
  CHECK(trivial.equality);
  REQUIRE(trivial.dual_y.has_value());
}

TEST_CASE("unbounded primal forces an infeasible dual") {
  // min x + 0 over the whole line.
  const auto zero = PolyhedralFunction::max_affine(1, {AffinePiece{vec({0}), 0}});
  const auto unbounded = fenchel_solve(linear1(), zero, id1());
  CHECK(unbounded.p_hat.is_minus_infinity());
  CHECK(unbounded.d_hat.is_minus_infinity());
  CHECK_FALSE(unbounded.equality);
}

TEST_CASE("Fenchel-Young and biconjugation on random functions") {
  SeededRng rng(5150);
  GenProfile prof{3, 5, 4};
  for (int it = 0; it < 12; ++it) {
    const AnchoredFunction inst = gen_function(rng, prof);
    const PolyhedralFunction& f = inst.f;
    const QVector x = inst.anchor;
    for (int q = 0; q < 3; ++q) {
      const QVector xs = f.pieces()[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(f.pieces().size()) - 1))].slope;
      const auto fs = conjugate_eval(f, xs);
      REQUIRE(fs.value.is_finite());
      Rational inner = 0;
      for (Index i = 0; i < f.dim(); ++i) inner += xs(i) * x(i);
      CHECK(f.eval(x).finite() + fs.value.finite() >= inner);
    }
    CHECK(biconjugate_eval(f, x) == f.eval(x));
  }
}

TEST_CASE("subdifferential-conjugate link") {
  SeededRng rng(5151);
  GenProfile prof{2, 4, 3};
  for (int it = 0; it < 10; ++it) {
    const AnchoredFunction inst = gen_function(rng, prof);
    const PolyhedralFunction& f = inst.f;
    const QVector x = inst.anchor;
    const auto sub = subdifferential_at(f, x);
    const auto xs = find_point(sub);
    REQUIRE(xs.has_value());
    // x* in subdifferential iff Fenchel-Young holds with equality.
    Rational inner = 0;
    for (Index i = 0; i < f.dim(); ++i) inner += (*xs)(i)*x(i);
    const auto fs = conjugate_eval(f, *xs);
    REQUIRE(fs.value.is_finite());
    CHECK(f.eval(x).finite() + fs.value.finite() == inner);

    // A direction strictly outside violates equality.
    const QVector probe = rng.vector(f.dim(), 3);
    if (!sub.contains_point(probe)) {
      const auto ps = conjugate_eval(f, probe);
      if (ps.value.is_finite()) {
        Rational pinner = 0;
        for (Index i = 0; i < f.dim(); ++i) pinner += probe(i) * x(i);
        CHECK(f.eval(x).finite() + ps.value.finite() > pinner);
      }
    }
  }
}
