// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "polycalc/functions.hpp"
#include "polycalc/generator.hpp"
#include "test_util.hpp"

using namespace polycalc;
using namespace polycalc::testutil;

namespace {

PolyhedralFunction abs1() {
  return PolyhedralFunction::max_affine(1, {AffinePiece{vec({1}), 0}, AffinePiece{vec({-1}), 0}});
}

PolyhedralFunction half_line_indicator() {
  return PolyhedralFunction::indicator(HPolyhedron::make(1, mat({{-1}}), vec({0})));  // [0, inf)
}

HPolyhedron interval(Rational lo, Rational hi) {
  return HPolyhedron::make(1, mat({{1}, {-1}}), vec({hi, -lo}));
}

}  // namespace

TEST_CASE("evaluation") {
  CHECK(abs1().eval(vec({-2})) == ExtendedRational(2));
  CHECK(half_line_indicator().eval(vec({-1})).is_plus_infinity());
  CHECK(abs1().eval(vec({0})) == ExtendedRational(0));
}

TEST_CASE("epigraph membership agrees with evaluation") {
  const auto f = abs1();
  const auto epi = epigraph(f);
  CHECK(epi.contains_point(vec({1, 1})));
  CHECK(epi.contains_point(vec({-2, 3})));
  CHECK_FALSE(epi.contains_point(vec({1, Rational(1, 2)})));

  const auto ind = PolyhedralFunction::indicator(HPolyhedron::make(1, mat({{1}, {-1}}), vec({0, 0})));
  const auto iepi = epigraph(ind);
  CHECK(iepi.contains_point(vec({0, 5})));
  CHECK_FALSE(iepi.contains_point(vec({1, 5})));
  CHECK_FALSE(iepi.contains_point(vec({0, -1})));
}

TEST_CASE("subdifferentials of the absolute value") {
  const auto f = abs1();
  CHECK(hpoly_equal(subdifferential_at(f, vec({0})), interval(-1, 1)));
  CHECK(hpoly_equal(subdifferential_at(f, vec({2})), interval(1, 1)));
  CHECK_THROWS_AS(subdifferential_at(half_line_indicator(), vec({-3})), std::invalid_argument);
}

TEST_CASE("subdifferential of an indicator is the normal cone") {
  const auto neg_ray = HPolyhedron::make(1, mat({{1}}), vec({0}));  // x <= 0 in subgradient space
  CHECK(hpoly_equal(subdifferential_at(half_line_indicator(), vec({0})), neg_ray));
}

TEST_CASE("both subdifferential routes agree on the examples") {
  const auto f = abs1();
  for (const auto& x : {vec({0}), vec({2}), vec({-1})})
    CHECK(hpoly_equal(subdifferential_at(f, x), subdifferential_via_active_pieces(f, x)));
}

TEST_CASE("sum rule worked examples") {
  // indicator of [0,inf) plus |.| at 0: (-inf, 1].
  auto rep = subdiff_sum_rule_check(half_line_indicator(), abs1(), vec({0}));
  CHECK(rep.qualification_holds);
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, HPolyhedron::make(1, mat({{1}}), vec({1}))));

  rep = subdiff_sum_rule_check(abs1(), abs1(), vec({0}));
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, interval(-2, 2)));

  const auto zero = PolyhedralFunction::max_affine(1, {AffinePiece{vec({0}), 0}});
  rep = subdiff_sum_rule_check(abs1(), zero, vec({5}));
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, interval(1, 1)));
}

TEST_CASE("chain rule worked examples") {
  auto rep = subdiff_chain_rule(abs1(), mat({{2}}), vec({0}));
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, interval(-2, 2)));

  rep = subdiff_chain_rule(abs1(), mat({{1}}), vec({Rational(1, 3)}));
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, interval(1, 1)));

  // |.| after (x1, x2) -> x1 + x2: the diagonal segment conv{(1,1), (-1,-1)}.
  rep = subdiff_chain_rule(abs1(), mat({{1, 1}}), vec({0, 0}));
  CHECK(rep.rule_holds);
  const auto segment = HPolyhedron::make(2, mat({{1, 0}, {-1, 0}}), vec({1, 1}), mat({{1, -1}}), vec({0}));
  CHECK(hpoly_equal(rep.left, segment));
}

TEST_CASE("composition outside the domain or range is rejected") {
  CHECK_THROWS_AS(subdiff_chain_rule(half_line_indicator(), mat({{1}}), vec({-2})), std::invalid_argument);
  // Range {0} misses dom f = [1, 2].
  const auto shifted = PolyhedralFunction::indicator(interval(1, 2));
  CHECK_THROWS_AS(compose_linear(shifted, mat({{0}})), std::invalid_argument);
}

TEST_CASE("subgradient inequality and monotonicity on random functions") {
  SeededRng rng(777);
  GenProfile prof{3, 5, 4};
  for (int it = 0; it < 15; ++it) {
    const AnchoredFunction inst = gen_function(rng, prof);
    const PolyhedralFunction& f = inst.f;

    const QVector x1 = inst.anchor;
    // Polyhedral functions have a subgradient everywhere on the domain.
    const auto g1 = find_point(subdifferential_at(f, x1));
    REQUIRE(g1.has_value());
    for (int s = 0; s < 4; ++s) {
      const QVector x = [&] {
        const auto out = maximize_over(f.domain(), rng.vector(f.dim(), 2));
        if (const auto* opt = as_optimal(out)) return opt->x;
        return inst.anchor;
      }();
      const ExtendedRational fx = f.eval(x);
      const ExtendedRational fx1 = f.eval(x1);
      Rational inner = 0;
      for (Index i = 0; i < f.dim(); ++i) inner += (*g1)(i) * (x(i) - x1(i));
      CHECK(fx.finite() - fx1.finite() >= inner);
    }

    // Monotonicity of the subdifferential map.
    const QVector x2 = [&] {
      const auto out = maximize_over(f.domain(), rng.vector(f.dim(), 2));
      if (const auto* opt = as_optimal(out)) return opt->x;
      return inst.anchor;
    }();
    const auto g2 = find_point(subdifferential_at(f, x2));
    REQUIRE(g2.has_value());
    Rational m = 0;
    for (Index i = 0; i < f.dim(); ++i) m += ((*g1)(i) - (*g2)(i)) * (x1(i) - x2(i));
    CHECK(m >= 0);
  }
}

TEST_CASE("two subdifferential routes agree on random functions") {
  SeededRng rng(778);
  GenProfile prof{3, 5, 4};
  for (int it = 0; it < 12; ++it) {
    const AnchoredFunction inst = gen_function(rng, prof);
    CHECK(hpoly_equal(subdifferential_at(inst.f, inst.anchor),
                      subdifferential_via_active_pieces(inst.f, inst.anchor)));
  }
}
