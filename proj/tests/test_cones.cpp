// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "polycalc/cones.hpp"
#include "test_util.hpp"

using namespace polycalc;
using namespace polycalc::testutil;

namespace {

GeneratedCone cone2(std::initializer_list<std::initializer_list<Rational>> gens) {
  std::vector<QVector> gv;
  for (const auto& g : gens) gv.push_back(vec(g));
  return GeneratedCone::make(2, std::move(gv));
}

}  // namespace

TEST_CASE("normal cones from active rows") {
  const auto orthant = HPolyhedron::make(2, mat({{-1, 0}, {0, -1}}), vec({0, 0}));
  const auto at_vertex = normal_cone_at(orthant, vec({0, 0}));
  REQUIRE(at_vertex.has_value());
  CHECK(cone_equal(*at_vertex, cone2({{-1, 0}, {0, -1}})));

  const auto inside = normal_cone_at(orthant, vec({1, 1}));
  REQUIRE(inside.has_value());
  CHECK(inside->generators.empty());

  const auto box = HPolyhedron::make(1, mat({{1}, {-1}}), vec({1, 0}));
  const auto at_edge = normal_cone_at(box, vec({1}));
  REQUIRE(at_edge.has_value());
  REQUIRE(at_edge->generators.size() == 1);
  CHECK(at_edge->generators[0] == vec({1}));

  CHECK_FALSE(normal_cone_at(box, vec({2})).has_value());
}

TEST_CASE("cone membership with multipliers and separators") {
  const auto quadrant = cone2({{1, 0}, {0, 1}});
  const auto yes = cone_contains(quadrant, vec({1, 1}));
  CHECK(yes.contained);
  QVector recombined = zero_vector(2);
  for (Index i = 0; i < 2; ++i) recombined += yes.multipliers(i) * quadrant.generators[static_cast<std::size_t>(i)];
  CHECK(recombined == vec({1, 1}));

  const auto no = cone_contains(quadrant, vec({-1, 0}));
  CHECK_FALSE(no.contained);
  for (const QVector& g : quadrant.generators) {
    Rational s = 0;
    for (Index i = 0; i < 2; ++i) s += no.separating_witness(i) * g(i);
    CHECK(s <= 0);
  }
  Rational at_v = no.separating_witness(0) * (-1);
  CHECK(at_v > 0);

  const GeneratedCone trivial = GeneratedCone::make(2, {});
  CHECK(cone_contains(trivial, vec({0, 0})).contained);
  CHECK_FALSE(cone_contains(trivial, vec({1, 0})).contained);
}

TEST_CASE("cone equality by mutual membership") {
  CHECK(cone_equal(cone2({{1, 0}, {0, 1}, {1, 1}}), cone2({{1, 0}, {0, 1}})));
  GeneratedCone left = GeneratedCone::make(1, {vec({1})});
  GeneratedCone right = GeneratedCone::make(1, {vec({-1})});
  CHECK_FALSE(cone_equal(left, right));
  CHECK(cone_equal(GeneratedCone::make(3, {}), GeneratedCone::make(3, {})));
}

TEST_CASE("cone H-representation and slices") {
  const auto h = cone_to_hpolyhedron(cone2({{1, 0}, {0, 1}}));
  CHECK(h.contains_point(vec({2, 3})));
  CHECK_FALSE(h.contains_point(vec({-1, 0})));

  // {u : (u, -1) in cone{(1,-1), (-1,-1)}} is the interval [-1, 1].
  const GeneratedCone epi_cone = cone2({{1, -1}, {-1, -1}});
  const auto slice = cone_slice(epi_cone, 1, vec({-1}));
  CHECK(hpoly_equal(slice, HPolyhedron::make(1, mat({{1}, {-1}}), vec({1, 1}))));
}

TEST_CASE("intersection rule on separable coordinates") {
  const auto p = HPolyhedron::make(2, mat({{1, 0}}), vec({0}));
  const auto omega = HPolyhedron::make(2, mat({{0, 1}}), vec({0}));
  const auto rep = normal_intersection_rule(p, omega, vec({0, 0}));
  CHECK(rep.qualification_holds);
  CHECK(rep.rule_holds);
  const auto member = cone_contains(rep.cone_sum, vec({1, 1}));
  CHECK(member.contained);
  for (const auto& dec : rep.decompositions) {
    CHECK(QVector(dec.part_p + dec.part_omega) == dec.target);
  }
}

TEST_CASE("intersection rule where the qualification fails but equality holds") {
  const auto p = HPolyhedron::make(1, mat({{1}}), vec({0}));
  const auto omega = HPolyhedron::make(1, mat({{-1}}), vec({0}));
  const auto rep = normal_intersection_rule(p, omega, vec({0}));
  CHECK_FALSE(rep.qualification_holds);
  CHECK(rep.rule_holds);
  GeneratedCone line = GeneratedCone::make(1, {vec({1}), vec({-1})});
  CHECK(cone_equal(rep.cone_intersection, line));
}

TEST_CASE("intersection rule at a relative interior point") {
  const auto box = HPolyhedron::make(1, mat({{1}, {-1}}), vec({1, 0}));
  const auto rep = normal_intersection_rule(box, box, vec({Rational(1, 2)}));
  CHECK(rep.qualification_holds);
  CHECK(rep.rule_holds);
  CHECK(rep.cone_intersection.generators.empty());
  CHECK(rep.cone_sum.generators.empty());
}

TEST_CASE("point outside the intersection is rejected") {
  const auto box = HPolyhedron::make(1, mat({{1}, {-1}}), vec({1, 0}));
  CHECK_THROWS_AS(normal_intersection_rule(box, box, vec({5})), std::invalid_argument);
}
