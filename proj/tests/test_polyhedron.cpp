// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "polycalc/polyhedron.hpp"
#include "polycalc/generator.hpp"
#include "test_util.hpp"

using namespace polycalc;
using namespace polycalc::testutil;

namespace {

HPolyhedron interval(Rational lo, Rational hi) {
  return HPolyhedron::make(1, mat({{1}, {-1}}), vec({hi, -lo}));
}

}  // namespace

TEST_CASE("emptiness with Farkas certificates") {
  CHECK_FALSE(is_empty(HPolyhedron::make(1, mat({{1}}), vec({1}))).empty);

  const auto rep = is_empty(HPolyhedron::make(1, mat({{1}, {-1}}), vec({-1, 0})));
  CHECK(rep.empty);
  REQUIRE(rep.farkas.has_value());
  const auto& fk = *rep.farkas;
  Rational lhs = fk.ineq_multipliers(0) * 1 + fk.ineq_multipliers(1) * (-1);
  Rational rhs = fk.ineq_multipliers(0) * (-1) + fk.ineq_multipliers(1) * 0;
  CHECK(lhs == 0);
  CHECK(rhs < 0);

  // Simplex-like set in R^2 is nonempty.
  CHECK_FALSE(is_empty(HPolyhedron::make(2, mat({{-1, 0}, {0, -1}}), vec({0, 0}),
                                         mat({{1, 1}}), vec({1})))
                  .empty);
}

TEST_CASE("membership") {
  const auto box = interval(0, 1);
  CHECK(box.contains_point(vec({Rational(1, 2)})));
  CHECK(box.contains_point(vec({0})));
  CHECK_FALSE(box.contains_point(vec({2})));
  CHECK_THROWS_AS(box.contains_point(vec({1, 2})), std::invalid_argument);
}

TEST_CASE("zero rows are normalized away; contradictions stay") {
  const auto fine = HPolyhedron::make(2, mat({{0, 0}, {1, 0}}), vec({3, 1}));
  CHECK(fine.num_ineq() == 1);
  const auto bad = HPolyhedron::make(2, mat({{0, 0}}), vec({-1}));
  CHECK(bad.num_ineq() == 1);
  CHECK(is_empty(bad).empty);
}

TEST_CASE("implicit equalities on the flattened segment") {
  // x1 + x2 <= 1, -(x1 + x2) <= -1, -x1 <= 0: a segment in the line x1+x2=1.
  const auto p = HPolyhedron::make(2, mat({{1, 1}, {-1, -1}, {-1, 0}}), vec({1, -1, 0}));
  const auto rep = implicit_equalities_report(p);
  CHECK(rep.implicit_equality_rows == std::vector<Index>{0, 1});
  CHECK(rep.affine_dim == 1);
  CHECK(rep.ri_point(0) + rep.ri_point(1) == 1);
  CHECK(rep.ri_point(0) > 0);
  CHECK(contains_point_ri(p, rep.ri_point));
}

TEST_CASE("implicit equalities on a half line and a point") {
  const auto half = HPolyhedron::make(1, mat({{1}}), vec({1}));
  const auto rep = implicit_equalities_report(half);
  CHECK(rep.implicit_equality_rows.empty());
  CHECK(rep.affine_dim == 1);
  CHECK(rep.ri_point(0) < 1);

  const auto point = HPolyhedron::make(1, mat({{1}, {-1}}), vec({0, 0}));
  const auto prep = implicit_equalities_report(point);
  CHECK(prep.implicit_equality_rows.size() == 2);
  CHECK(prep.affine_dim == 0);
  CHECK(prep.ri_point(0) == 0);

  CHECK_THROWS_AS(implicit_equalities_report(empty_polyhedron(1)), std::invalid_argument);
}

TEST_CASE("relative interior membership on an interval") {
  const auto box = interval(0, 1);
  CHECK(contains_point_ri(box, vec({Rational(1, 2)})));
  CHECK_FALSE(contains_point_ri(box, vec({0})));
  CHECK_FALSE(contains_point_ri(box, vec({2})));
}

TEST_CASE("projection examples") {
  const auto p = HPolyhedron::make(2, mat({{1, 1}, {0, -1}}), vec({1, 0}));
  CHECK(hpoly_equal(project_fm(p, 1), HPolyhedron::make(1, mat({{1}}), vec({1}))));

  CHECK(hpoly_equal(project_fm(HPolyhedron(2), 1), HPolyhedron(1)));

  CHECK(is_empty(project_fm(empty_polyhedron(3), 1)).empty);
}

TEST_CASE("redundancy removal") {
  const auto narrowed = remove_redundant(HPolyhedron::make(1, mat({{1}, {1}}), vec({1, 2})));
  CHECK(narrowed.num_ineq() == 1);
  CHECK(narrowed.b()(0) == 1);

  const auto kept = remove_redundant(HPolyhedron::make(1, mat({{1}}), vec({1})));
  CHECK(kept.num_ineq() == 1);

  const auto demo = remove_redundant(
      HPolyhedron::make(2, mat({{1, 0}, {0, 1}, {1, 1}}), vec({1, 1, 3})));
  CHECK(demo.num_ineq() == 2);
  CHECK(hpoly_equal(demo, HPolyhedron::make(2, mat({{1, 0}, {0, 1}}), vec({1, 1}))));
}

TEST_CASE("Minkowski sums") {
  const auto unit = interval(0, 1);
  CHECK(hpoly_equal(minkowski_sum(unit, unit), interval(0, 2)));

  const auto origin = HPolyhedron::make(1, mat({{1}, {-1}}), vec({0, 0}));
  CHECK(hpoly_equal(minkowski_sum(origin, unit), unit));

  const auto orthant = HPolyhedron::make(2, mat({{-1, 0}, {0, -1}}), vec({0, 0}));
  CHECK(hpoly_equal(minkowski_sum(orthant, orthant), orthant));
}

TEST_CASE("affine images") {
  const auto unit = interval(0, 1);
  CHECK(hpoly_equal(affine_image(unit, mat({{2}}), vec({0})), interval(0, 2)));
  const auto collapsed = affine_image(unit, mat({{0}}), vec({0}));
  CHECK(hpoly_equal(collapsed, HPolyhedron::make(1, mat({{1}, {-1}}), vec({0, 0}))));
  // x -> (x, x) maps the line onto the diagonal.
  const auto diag = affine_image(HPolyhedron(1), mat({{1}, {1}}), vec({0, 0}));
  CHECK(hpoly_equal(diag, HPolyhedron::make(2, empty_rows(2), vec({}), mat({{1, -1}}), vec({0}))));
}

TEST_CASE("intersections") {
  CHECK(hpoly_equal(intersect(interval(0, 2), interval(1, 3)), interval(1, 2)));
  const auto p = interval(-1, 5);
  CHECK(hpoly_equal(intersect(p, HPolyhedron(1)), p));
  CHECK(is_empty(intersect(interval(0, 1), interval(2, 3))).empty);
}

TEST_CASE("sum and image membership match the direct LP oracles") {
  SeededRng rng(31337);
  GenProfile prof{2, 4, 3};
  for (int it = 0; it < 10; ++it) {
    const auto a = gen_polyhedron_planted(rng, prof);
    GenProfile same = prof;
    same.dims = a.set.dim();
    auto b = gen_polyhedron_planted(rng, same);
    while (b.set.dim() != a.set.dim()) b = gen_polyhedron_planted(rng, same);
    const Index n = a.set.dim();

    const auto sum = minkowski_sum(a.set, b.set);
    for (int s = 0; s < 5; ++s) {
      const QVector z = rng.vector(n, 5);
      // z in P + Q iff some v in Q has z - v in P.
      QMatrix rows(a.set.num_ineq() + b.set.num_ineq(), n);
      QVector rhs(rows.rows());
      for (Index i = 0; i < a.set.num_ineq(); ++i) {
        Rational shift = 0;
        for (Index j = 0; j < n; ++j) {
          rows(i, j) = -a.set.A()(i, j);
          shift += a.set.A()(i, j) * z(j);
        }
        rhs(i) = a.set.b()(i) - shift;
      }
      for (Index i = 0; i < b.set.num_ineq(); ++i)
        for (Index j = 0; j < n; ++j) rows(a.set.num_ineq() + i, j) = b.set.A()(i, j);
      rhs.tail(b.set.num_ineq()) = b.set.b();
      QMatrix eqs(a.set.num_eq() + b.set.num_eq(), n);
      QVector eqr(eqs.rows());
      for (Index i = 0; i < a.set.num_eq(); ++i) {
        Rational shift = 0;
        for (Index j = 0; j < n; ++j) {
          eqs(i, j) = -a.set.E()(i, j);
          shift += a.set.E()(i, j) * z(j);
        }
        eqr(i) = a.set.e()(i) - shift;
      }
      for (Index i = 0; i < b.set.num_eq(); ++i)
        for (Index j = 0; j < n; ++j) eqs(a.set.num_eq() + i, j) = b.set.E()(i, j);
      eqr.tail(b.set.num_eq()) = b.set.e();
      const bool oracle =
          find_point(HPolyhedron::make(n, std::move(rows), std::move(rhs), std::move(eqs), std::move(eqr)))
              .has_value();
      CHECK(sum.contains_point(z) == oracle);
    }

    // Image membership: y in M(P) iff the preimage of y meets P.
    QMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = rng.uniform(-2, 2);
    const auto image = affine_image(a.set, m, zero_vector(n));
    for (int s = 0; s < 5; ++s) {
      const QVector y = rng.vector(n, 5);
      QMatrix eqs = m;
      const bool oracle =
          find_point(intersect(a.set, HPolyhedron::make(n, empty_rows(n), vec({}), std::move(eqs), y)))
              .has_value();
      CHECK(image.contains_point(y) == oracle);
    }
  }
}

TEST_CASE("random polyhedra: ri points, projections, redundancy") {
  SeededRng rng(424242);
  GenProfile prof{3, 6, 4};
  for (int it = 0; it < 25; ++it) {
    const auto inst = gen_polyhedron_planted(rng, prof);
    CHECK(inst.set.contains_point(inst.anchor));
    const QVector ri = relative_interior_point(inst.set);
    CHECK(contains_point_ri(inst.set, ri));

    const auto slim = remove_redundant(inst.set);
    CHECK(hpoly_equal(slim, inst.set));

    if (inst.set.dim() >= 2) {
      const Index keep = inst.set.dim() - 1;
      const auto proj = project_fm(inst.set, keep);
      CHECK(proj.contains_point(QVector(inst.anchor.head(keep))));
    }
  }
}
