// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "polycalc/setvalued.hpp"
#include "polycalc/generator.hpp"
#include "test_util.hpp"

using namespace polycalc;
using namespace polycalc::testutil;

namespace {

// F(x) = [x, inf): graph {x - y <= 0}.
PolyMap upper_graph() {
  return PolyMap::make(1, 1, HPolyhedron::make(2, mat({{1, -1}}), vec({0})));
}

// Constant map x -> [0, inf).
PolyMap nonneg_const() {
  return PolyMap::make(1, 1, HPolyhedron::make(2, mat({{0, -1}}), vec({0})));
}

PolyMap zero_map() {
  return PolyMap::make(1, 1, HPolyhedron::make(2, empty_rows(2), vec({}), mat({{0, 1}}), vec({0})));
}

HPolyhedron point1(Rational v) {
  return HPolyhedron::make(1, empty_rows(1), vec({}), mat({{1}}), vec({v}));
}

}  // namespace

TEST_CASE("coderivative of an epigraphical map") {
  const auto f = upper_graph();
  CHECK(hpoly_equal(coderivative_at(f, vec({0}), vec({0}), vec({1})), point1(1)));
  CHECK(is_empty(coderivative_at(f, vec({0}), vec({0}), vec({-1}))).empty);
  CHECK_THROWS_AS(coderivative_at(f, vec({0}), vec({-1}), vec({1})), std::invalid_argument);

  const auto everything = PolyMap::make(1, 1, HPolyhedron(2));
  CHECK(hpoly_equal(coderivative_at(everything, vec({3}), vec({4}), vec({0})), point1(0)));
}

TEST_CASE("map sums") {
  const auto identity = PolyMap::identity(1);
  const auto sum = map_sum(identity, nonneg_const());
  CHECK(hpoly_equal(sum.graph(), upper_graph().graph()));

  const auto with_zero = map_sum(identity, zero_map());
  CHECK(hpoly_equal(with_zero.graph(), identity.graph()));

  const auto doubled = map_sum(upper_graph(), upper_graph());
  CHECK(hpoly_equal(doubled.graph(), HPolyhedron::make(2, mat({{2, -1}}), vec({0}))));
}

TEST_CASE("map compositions") {
  const auto twice = PolyMap::linear(mat({{2}}));
  const auto composed = map_compose(twice, upper_graph());
  CHECK(hpoly_equal(composed.graph(), HPolyhedron::make(2, mat({{2, -1}}), vec({0}))));

  const auto with_identity = map_compose(upper_graph(), PolyMap::identity(1));
  CHECK(hpoly_equal(with_identity.graph(), upper_graph().graph()));

  // Restricting the middle variable shrinks the composed domain.
  const auto restricted = PolyMap::make(1, 1, HPolyhedron::make(2, mat({{1, 0}}), vec({0}), mat({{1, -1}}), vec({0})));
  const auto shrunk = map_compose(PolyMap::identity(1), restricted);
  CHECK(hpoly_equal(shrunk.graph(), restricted.graph()));
}

TEST_CASE("split search") {
  const auto split = find_split(upper_graph(), nonneg_const(), vec({0}), vec({3}), vec({1}));
  REQUIRE(split.has_value());
  CHECK(QVector(split->y1 + split->y2) == vec({3}));
  CHECK(upper_graph().graph_contains(split->x, split->y1));
  CHECK(nonneg_const().graph_contains(split->x, split->y2));
  CHECK_FALSE(find_split(nonneg_const(), nonneg_const(), vec({0}), vec({-1}), vec({1})).has_value());
}

TEST_CASE("coderivative sum rule worked examples") {
  const auto identity = PolyMap::identity(1);
  SplitPoint origin{vec({0}), vec({0}), vec({0}), vec({0})};

  auto rep = coderivative_sum_rule_check(identity, nonneg_const(), origin, vec({1}));
  CHECK(rep.qualification_holds);
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, point1(1)));

  rep = coderivative_sum_rule_check(upper_graph(), zero_map(), origin, vec({1}));
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, coderivative_at(upper_graph(), vec({0}), vec({0}), vec({1}))));

  rep = coderivative_sum_rule_check(identity, identity, origin, vec({1}));
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, point1(2)));

  SplitPoint bad{vec({0}), vec({1}), vec({0}), vec({0})};
  CHECK_THROWS_AS(coderivative_sum_rule_check(identity, identity, bad, vec({1})), std::invalid_argument);
}

TEST_CASE("coderivative chain rule worked examples") {
  const auto twice = PolyMap::linear(mat({{2}}));
  auto rep = coderivative_chain_rule_check(twice, upper_graph(), vec({0}), vec({0}), vec({0}), vec({1}));
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, point1(2)));

  rep = coderivative_chain_rule_check(upper_graph(), PolyMap::identity(1), vec({0}), vec({0}), vec({0}), vec({1}));
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, point1(1)));

  rep = coderivative_chain_rule_check(PolyMap::identity(1), upper_graph(), vec({0}), vec({0}), vec({0}), vec({1}));
  CHECK(rep.rule_holds);
  CHECK(hpoly_equal(rep.left, point1(1)));
}

TEST_CASE("linear maps have singleton coderivatives") {
  SeededRng rng(91);
  for (int it = 0; it < 10; ++it) {
    const Index nx = 1 + static_cast<Index>(rng.uniform(0, 2));
    const Index ny = 1 + static_cast<Index>(rng.uniform(0, 2));
    QMatrix a = zero_matrix(ny, nx);
    for (Index i = 0; i < ny; ++i)
      for (Index j = 0; j < nx; ++j) a(i, j) = rng.uniform(-3, 3);
    const auto lin = PolyMap::linear(a);
    const QVector x = rng.vector(nx, 2);
    const QVector ystar = rng.vector(ny, 3);
    const auto cod = coderivative_at(lin, x, QVector(a * x), ystar);
    const QVector target = a.transpose() * ystar;
    CHECK(cod.contains_point(target));
    QMatrix id = zero_matrix(nx, nx);
    for (Index i = 0; i < nx; ++i) id(i, i) = 1;
    CHECK(hpoly_equal(cod, HPolyhedron::make(nx, empty_rows(nx), vec({}), std::move(id), target)));
  }
}

TEST_CASE("graph projections stay coherent with membership") {
  SeededRng rng(92);
  GenProfile prof{3, 5, 3};
  for (int it = 0; it < 8; ++it) {
    const MapSumInstance inst = gen_map_sum_instance(rng, prof);
    const PolyMap sum = map_sum(inst.f1, inst.f2);
    CHECK(sum.graph_contains(inst.split.x, inst.split.y));
  }
}
