// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "polycalc/linalg.hpp"
#include "test_util.hpp"

#include <random>

using namespace polycalc;
using namespace polycalc::testutil;

TEST_CASE("rref of identity, proportional rows, permutation") {
  const QMatrix id = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto r = rref_rank(id);
  CHECK(r.rank == 3);
  CHECK(r.rref == id);

  r = rref_rank(mat({{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.rref == mat({{1, 2}, {0, 0}}));

  r = rref_rank(mat({{0, 1}, {1, 0}}));
  CHECK(r.rank == 2);
  CHECK(r.rref == mat({{1, 0}, {0, 1}}));
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const Index rows = 1 + static_cast<Index>(rng() % 5);
    const Index cols = 1 + static_cast<Index>(rng() % 5);
    QMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng() % 11) - 5;
    const auto once = rref_rank(m);
    const auto twice = rref_rank(once.rref);
    CHECK(once.rref == twice.rref);
    CHECK(once.rank == twice.rank);
  }
}

TEST_CASE("solve_linear_system on the worked examples") {
  const auto sym = solve_linear_system(mat({{1, 1}, {1, -1}}), vec({2, 0}));
  REQUIRE(sym.has_value());
  CHECK(sym->particular == vec({1, 1}));
  CHECK(sym->nullspace_basis.empty());

  CHECK_FALSE(solve_linear_system(mat({{1}, {1}}), vec({1, 2})).has_value());

  const auto under = solve_linear_system(mat({{1, 1}}), vec({1}));
  REQUIRE(under.has_value());
  CHECK(under->particular == vec({1, 0}));
  REQUIRE(under->nullspace_basis.size() == 1);
  const QVector& basis = under->nullspace_basis[0];
  CHECK(basis(0) + basis(1) == 0);
  CHECK_FALSE(is_zero_vector(basis));
}

TEST_CASE("solutions substitute back exactly on random systems") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 60; ++it) {
    const Index rows = 1 + static_cast<Index>(rng() % 4);
    const Index cols = 1 + static_cast<Index>(rng() % 4);
    QMatrix m(rows, cols);
    QVector rhs(rows);
    for (Index i = 0; i < rows; ++i) {
      rhs(i) = static_cast<long>(rng() % 9) - 4;
      for (Index j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng() % 9) - 4;
    }
    const auto sol = solve_linear_system(m, rhs);
    if (!sol) continue;
    CHECK(QVector(m * sol->particular) == rhs);
    for (const QVector& v : sol->nullspace_basis) CHECK(is_zero_vector(m * v));
    CHECK(sol->nullspace_basis.size() ==
          static_cast<std::size_t>(cols - rref_rank(m).rank));
  }
}
