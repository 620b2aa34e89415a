// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "polycalc/separation.hpp"
#include "polycalc/generator.hpp"
#include "test_util.hpp"

using namespace polycalc;
using namespace polycalc::testutil;

TEST_CASE("touching half-planes separate along the shared boundary") {
  const auto p = HPolyhedron::make(2, mat({{0, 1}}), vec({0}));      // x2 <= 0
  const auto omega = HPolyhedron::make(2, mat({{0, -1}}), vec({0}));  // x2 >= 0
  const auto res = properly_separate(p, omega);
  REQUIRE(res.separable());
  const auto& cert = *res.certificate;
  CHECK(cert.v == vec({0, 1}));
  CHECK(cert.alpha == 0);
  Rational at_witness = cert.v(0) * cert.strict_witness(0) + cert.v(1) * cert.strict_witness(1);
  CHECK(at_witness > 0);
  CHECK(verify_separation_certificate(p, omega, cert));
}

TEST_CASE("identical full spaces cannot be separated") {
  const auto res = properly_separate(HPolyhedron(2), HPolyhedron(2));
  CHECK_FALSE(res.separable());
  REQUIRE(res.not_separable_witness.has_value());
}

TEST_CASE("disjoint intervals separate with a margin") {
  const auto p = HPolyhedron::make(1, mat({{1}}), vec({-1}));       // x <= -1
  const auto omega = HPolyhedron::make(1, mat({{-1}}), vec({-1}));  // x >= 1
  const auto res = properly_separate(p, omega);
  REQUIRE(res.separable());
  const auto& cert = *res.certificate;
  CHECK(cert.v == vec({1}));
  CHECK(cert.alpha >= -1);
  CHECK(cert.alpha <= 1);
  CHECK(verify_separation_certificate(p, omega, cert));
}

TEST_CASE("tampered certificates are rejected") {
  const auto p = HPolyhedron::make(2, mat({{0, 1}}), vec({0}));
  const auto omega = HPolyhedron::make(2, mat({{0, -1}}), vec({0}));
  auto cert = *properly_separate(p, omega).certificate;

  auto bad_alpha = cert;
  bad_alpha.alpha = 2;  // now above the strict witness and the sup bound
  CHECK_FALSE(verify_separation_certificate(p, omega, bad_alpha));

  auto zero_v = cert;
  zero_v.v = vec({0, 0});
  CHECK_FALSE(verify_separation_certificate(p, omega, zero_v));

  auto outside_witness = cert;
  outside_witness.strict_witness = vec({0, -1});
  CHECK_FALSE(verify_separation_certificate(p, omega, outside_witness));
}

TEST_CASE("empty inputs are rejected") {
  CHECK_THROWS_AS(properly_separate(empty_polyhedron(1), HPolyhedron(1)), std::invalid_argument);
}

TEST_CASE("separation branch matches the direct ri oracle on random pairs") {
  SeededRng rng(20240202);
  GenProfile prof{3, 5, 4};
  QMatrix id3 = zero_matrix(3, 3);
  int separable_seen = 0, overlapping_seen = 0;
  for (int it = 0; it < 40; ++it) {
    const PolyhedronPair pair = gen_separation_pair(rng, prof);
    QMatrix id = zero_matrix(pair.p.dim(), pair.p.dim());
    for (Index i = 0; i < pair.p.dim(); ++i) id(i, i) = 1;
    const bool meets = meets_relative_interior(pair.p, pair.omega, id).has_value();
    const auto res = properly_separate(pair.p, pair.omega);
    CHECK(res.separable() != meets);
    if (res.separable()) {
      ++separable_seen;
      CHECK(verify_separation_certificate(pair.p, pair.omega, *res.certificate));
    } else {
      ++overlapping_seen;
      CHECK(pair.p.contains_point(*res.not_separable_witness));
      CHECK(contains_point_ri(pair.omega, *res.not_separable_witness));
    }
  }
  CHECK(separable_seen > 0);
  CHECK(overlapping_seen > 0);
}
