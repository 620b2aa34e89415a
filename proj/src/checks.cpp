// SPDX-License-Identifier: Apache-2.0

#include "polycalc/checks.hpp"

#include "polycalc/separation.hpp"

#include <ostream>
#include <sstream>

namespace polycalc {

namespace {

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

QMatrix identity_matrix(Index n) {
  QMatrix m = zero_matrix(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

long battery_count(const SuiteConfig& cfg, long def) { return cfg.count_override > 0 ? cfg.count_override : def; }

// A point of p, preferring vertices of random support LPs over the anchor.
QVector sample_point(SeededRng& rng, const HPolyhedron& p, const QVector& fallback) {
  const QVector obj = rng.vector(p.dim(), 2);
  const LPOutcome out = maximize_over(p, obj);
  if (const auto* opt = as_optimal(out)) return opt->x;
  if (const auto* ub = as_unbounded(out)) return ub->feasible_point;
  return fallback;
}

// x* with finite conjugate: random tries first, then a piece slope, which
// always works.
QVector finite_conjugate_direction(SeededRng& rng, const PolyhedralFunction& f) {
  for (int t = 0; t < 4; ++t) {
    const QVector xs = rng.vector(f.dim(), 3);
    if (conjugate_eval(f, xs).value.is_finite()) return xs;
  }
  const std::size_t pick = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(f.pieces().size()) - 1));
  return f.pieces()[pick].slope;
}

}  // namespace

CriterionResult check_lp_certificate_closure(const SuiteConfig& cfg) {
  const long total = battery_count(cfg, 500);
  SeededRng rng(cfg.seed * 1000003 + 1);
  long optimal = 0, unbounded = 0, infeasible = 0;
  for (long i = 0; i < total; ++i) {
    const LPProblem p = gen_lp(rng, cfg.profile);
    const LPOutcome out = solve_lp(p);
    if (!verify_lp_certificate(p, out))
      return {"lp-certificate-closure", false, i + 1, "certificate verification failed"};
    if (const auto* opt = as_optimal(out)) {
      Rational dual = 0;
      for (Index r = 0; r < p.num_ineq(); ++r) dual += p.b(r) * opt->ineq_duals(r);
      for (Index r = 0; r < p.num_eq(); ++r) dual += p.e(r) * opt->eq_duals(r);
      if (opt->value != -dual)
        return {"lp-certificate-closure", false, i + 1, "primal and dual objective values differ"};
      ++optimal;
    } else if (as_unbounded(out)) {
      ++unbounded;
    } else {
      ++infeasible;
    }
  }
  std::ostringstream detail;
  detail << optimal << " optimal / " << unbounded << " unbounded / " << infeasible << " infeasible";
  return {"lp-certificate-closure", true, total, detail.str()};
}

CriterionResult check_separation_iff(const SuiteConfig& cfg) {
  const long total = battery_count(cfg, 300);
  SeededRng rng(cfg.seed * 1000003 + 2);
  long separable = 0;
  for (long i = 0; i < total; ++i) {
    const PolyhedronPair pair = gen_separation_pair(rng, cfg.profile);
    const auto oracle = meets_relative_interior(pair.p, pair.omega, identity_matrix(pair.p.dim()));
    const SeparationResult res = properly_separate(pair.p, pair.omega);
    if (res.separable() == oracle.has_value())
      return {"separation-iff", false, i + 1, "separation branch disagrees with the direct ri oracle"};
    if (res.separable()) {
      ++separable;
      if (!verify_separation_certificate(pair.p, pair.omega, *res.certificate))
        return {"separation-iff", false, i + 1, "certificate failed verification"};
    } else {
      const QVector& w = *res.not_separable_witness;
      if (!pair.p.contains_point(w) || !contains_point_ri(pair.omega, w))
        return {"separation-iff", false, i + 1, "witness is not in P cap ri(Omega)"};
    }
  }
  std::ostringstream detail;
  detail << separable << " separable / " << (total - separable) << " overlapping";
  return {"separation-iff", true, total, detail.str()};
}

CriterionResult check_normal_cone_intersection(const SuiteConfig& cfg) {
  const long total = battery_count(cfg, 200);
  SeededRng rng(cfg.seed * 1000003 + 3);
  long qualified = 0, unqualified_but_equal = 0;
  for (long i = 0; i < total; ++i) {
    const PolyhedronPair pair = gen_pair_with_common_point(rng, cfg.profile);
    IntersectionRuleReport rep = normal_intersection_rule(pair.p, pair.omega, pair.common_point);

    // Random nonnegative combinations of the sum cone stay in the
    // intersection cone.
    for (int s = 0; s < 3 && !rep.cone_sum.generators.empty(); ++s) {
      QVector combo = zero_vector(pair.p.dim());
      for (const QVector& g : rep.cone_sum.generators) combo += Rational(rng.uniform(0, 3)) * g;
      if (!is_zero_vector(combo) && !cone_contains(rep.cone_intersection, combo).contained)
        return {"normal-cone-intersection", false, i + 1, "sampled sum-cone element escapes"};
    }
    if (rep.qualification_holds) {
      ++qualified;
      if (!rep.rule_holds)
        return {"normal-cone-intersection", false, i + 1, "equality fails on a qualified instance"};
    } else if (rep.rule_holds) {
      ++unqualified_but_equal;
    }
    // Every decomposition must recombine and land in the right cones.
    const auto cone_p = normal_cone_at(pair.p, pair.common_point);
    const auto cone_o = normal_cone_at(pair.omega, pair.common_point);
    if (rep.rule_holds && rep.decompositions.size() != rep.cone_intersection.generators.size())
      return {"normal-cone-intersection", false, i + 1, "missing decompositions under equality"};
    for (const NormalDecomposition& dec : rep.decompositions) {
      if (QVector(dec.part_p + dec.part_omega) != dec.target)
        return {"normal-cone-intersection", false, i + 1, "decomposition does not recombine"};
      if (!is_zero_vector(dec.part_p) && !cone_contains(*cone_p, dec.part_p).contained)
        return {"normal-cone-intersection", false, i + 1, "P-part escapes N(x;P)"};
      if (!is_zero_vector(dec.part_omega) && !cone_contains(*cone_o, dec.part_omega).contained)
        return {"normal-cone-intersection", false, i + 1, "Omega-part escapes N(x;Omega)"};
    }
  }
  std::ostringstream detail;
  detail << qualified << " qualified (equality on all); equality also held on " << unqualified_but_equal
         << " unqualified instances (informational)";
  return {"normal-cone-intersection", true, total, detail.str()};
}

CriterionResult check_conjugate_identities(const SuiteConfig& cfg) {
  const long total = battery_count(cfg, 200);
  SeededRng rng(cfg.seed * 1000003 + 4);
  for (long i = 0; i < total; ++i) {
    const AnchoredFunction inst = gen_function(rng, cfg.profile);
    const PolyhedralFunction& f = inst.f;
    const HPolyhedron epi = epigraph(f);
    for (int q = 0; q < 5; ++q) {
      // Conjugate equals the epigraph support function at (x*, -1).
      const QVector xs = rng.vector(f.dim(), 3);
      QVector lifted(f.dim() + 1);
      lifted.head(f.dim()) = xs;
      lifted(f.dim()) = -1;
      if (conjugate_eval(f, xs).value != support_eval(epi, lifted).value)
        return {"conjugate-identities", false, i + 1, "conjugate != epigraph support value"};
    }
    for (int q = 0; q < 5; ++q) {
      // Fenchel-Young with exact arithmetic.
      const QVector x = sample_point(rng, f.domain(), inst.anchor);
      const QVector xs = finite_conjugate_direction(rng, f);
      const ExtendedRational fx = f.eval(x);
      const ConjugateValue fs = conjugate_eval(f, xs);
      if (!fx.is_finite() || !fs.value.is_finite())
        return {"conjugate-identities", false, i + 1, "unexpected infinite value in Fenchel-Young"};
      if (fx.finite() + fs.value.finite() < dot(xs, x))
        return {"conjugate-identities", false, i + 1, "Fenchel-Young violated"};
    }
    for (int q = 0; q < 5; ++q) {
      const QVector x = sample_point(rng, f.domain(), inst.anchor);
      if (biconjugate_eval(f, x) != f.eval(x))
        return {"conjugate-identities", false, i + 1, "biconjugate differs from the function"};
    }
  }
  return {"conjugate-identities", true, total, "lemma consistency, Fenchel-Young, biconjugation"};
}

CriterionResult check_conjugate_sum_rule(const SuiteConfig& cfg) {
  const long total = battery_count(cfg, 200);
  SeededRng rng(cfg.seed * 1000003 + 5);
  for (long i = 0; i < total; ++i) {
    const QualifiedFunctionPair pair = gen_qualified_function_pair(rng, cfg.profile);
    // Sums of piece slopes always have a finite conjugate of the sum.
    const auto& fp = pair.f.pieces();
    const auto& gp = pair.g.pieces();
    const QVector xs = fp[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(fp.size()) - 1))].slope +
                       gp[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(gp.size()) - 1))].slope;
    const ConjugateSumResult res = conjugate_sum_rule(pair.f, pair.g, xs);
    if (!res.value.is_finite())
      return {"conjugate-sum-rule", false, i + 1, "expected a finite conjugate of the sum"};
    if (QVector(*res.xstar_f + *res.xstar_g) != xs)
      return {"conjugate-sum-rule", false, i + 1, "split does not recombine"};
    if (ExtendedRational(*res.part_f + *res.part_g) != res.value)
      return {"conjugate-sum-rule", false, i + 1, "parts do not sum to the value"};
    // Independent route: conjugate of the materialized sum function.
    if (conjugate_eval(sum(pair.f, pair.g), xs).value != res.value)
      return {"conjugate-sum-rule", false, i + 1, "value differs from the direct conjugate of f+g"};
  }
  return {"conjugate-sum-rule", true, total, "value equality and exact recombination"};
}

CriterionResult check_strong_duality(const SuiteConfig& cfg) {
  const long total = battery_count(cfg, 200);
  SeededRng rng(cfg.seed * 1000003 + 6);
  long finite = 0, unbounded = 0;
  for (long i = 0; i < total; ++i) {
    const FenchelInstance inst = gen_qualified_fenchel(rng, cfg.profile);
    const DualityCertificate cert = fenchel_solve(inst.f, inst.g, inst.a);
    if (!cert.qualification_holds)
      return {"strong-duality-attainment", false, i + 1, "generator produced an unqualified instance"};
    if (cert.p_hat != cert.d_hat)
      return {"strong-duality-attainment", false, i + 1, "p_hat != d_hat on a qualified instance"};
    if (cert.p_hat.is_finite()) {
      ++finite;
      if (!cert.equality || !cert.dual_y || !cert.primal_x)
        return {"strong-duality-attainment", false, i + 1, "missing attainment certificates"};
      // Re-verify the dual witness from scratch.
      const QVector aty = inst.a.transpose() * (*cert.dual_y);
      const ConjugateValue fs = conjugate_eval(inst.f, aty);
      const ConjugateValue gs = conjugate_eval(inst.g, QVector(-(*cert.dual_y)));
      if (!fs.value.is_finite() || !gs.value.is_finite() ||
          ExtendedRational(-(fs.value.finite() + gs.value.finite())) != cert.d_hat)
        return {"strong-duality-attainment", false, i + 1, "dual witness does not attain d_hat"};
    } else {
      ++unbounded;
    }
  }

  // Fixed no-overlap instance: f the indicator of (-inf, -1], g of [1, inf),
  // A = 1. Expected per the acceptance contract: p_hat = +inf, d_hat = 0.
  QMatrix a1 = zero_matrix(1, 1);
  QVector b1(1);
  a1(0, 0) = 1;
  b1(0) = -1;
  const PolyhedralFunction find = PolyhedralFunction::indicator(HPolyhedron::make(1, a1, b1));
  QMatrix a2 = zero_matrix(1, 1);
  QVector b2(1);
  a2(0, 0) = -1;
  b2(0) = -1;
  const PolyhedralFunction gind = PolyhedralFunction::indicator(HPolyhedron::make(1, a2, b2));
  const DualityValues gap = weak_duality_gap(find, gind, identity_matrix(1));
  const DualityCertificate gap_cert = fenchel_solve(find, gind, identity_matrix(1));
  std::ostringstream detail;
  detail << finite << " finite / " << unbounded << " unbounded qualified instances; fixed instance: p_hat="
         << gap.p_hat.str() << ", d_hat=" << gap.d_hat.str() << ", qualification="
         << (gap_cert.qualification_holds ? "true" : "false");
  const bool gap_matches_contract =
      gap.p_hat.is_plus_infinity() && gap.d_hat == ExtendedRational(0) && !gap_cert.qualification_holds;
  if (!gap_matches_contract) {
    detail << "; expected d_hat=0 (contract) but the dual of the stated problem is unbounded: "
              "its objective exceeds any bound along the separating direction, so d_hat=+inf";
    return {"strong-duality-attainment", false, total, detail.str()};
  }
  return {"strong-duality-attainment", true, total, detail.str()};
}

CriterionResult check_subdifferential_calculus(const SuiteConfig& cfg) {
  const long total = battery_count(cfg, 200);
  const long rule_total = battery_count(cfg, 100);
  SeededRng rng(cfg.seed * 1000003 + 7);
  for (long i = 0; i < total; ++i) {
    const AnchoredFunction inst = gen_function(rng, cfg.profile);
    const QVector x = sample_point(rng, inst.f.domain(), inst.anchor);
    if (!hpoly_equal(subdifferential_at(inst.f, x), subdifferential_via_active_pieces(inst.f, x)))
      return {"subdifferential-two-path", false, i + 1, "epigraph route != active-piece route"};
  }
  for (long i = 0; i < rule_total; ++i) {
    const QualifiedFunctionPair pair = gen_qualified_function_pair(rng, cfg.profile);
    const SubdiffSumReport rep = subdiff_sum_rule_check(pair.f, pair.g, pair.common_point);
    if (!rep.qualification_holds)
      return {"subdifferential-two-path", false, total + i + 1, "generator produced an unqualified sum instance"};
    if (!rep.rule_holds)
      return {"subdifferential-two-path", false, total + i + 1, "sum rule equality failed"};
  }
  for (long i = 0; i < rule_total; ++i) {
    const ChainInstance inst = gen_chain_instance(rng, cfg.profile);
    const SubdiffChainReport rep = subdiff_chain_rule(inst.f, inst.a, inst.x);
    if (!rep.rule_holds)
      return {"subdifferential-two-path", false, total + rule_total + i + 1, "chain rule equality failed"};
  }
  std::ostringstream detail;
  detail << total << " two-path + " << rule_total << " sum + " << rule_total << " chain";
  return {"subdifferential-two-path", true, total + 2 * rule_total, detail.str()};
}

CriterionResult check_coderivative_calculus(const SuiteConfig& cfg) {
  const long rule_total = battery_count(cfg, 100);
  const long linear_total = battery_count(cfg, 50);
  SeededRng rng(cfg.seed * 1000003 + 8);
  long qualified_sum = 0, qualified_chain = 0;
  for (long i = 0; i < rule_total; ++i) {
    const MapSumInstance inst = gen_map_sum_instance(rng, cfg.profile);
    const QVector ystar = rng.vector(inst.f1.ny(), 3);
    const CoderivSumReport rep = coderivative_sum_rule_check(inst.f1, inst.f2, inst.split, ystar);
    if (rep.qualification_holds) {
      ++qualified_sum;
      if (!rep.rule_holds)
        return {"coderivative-calculus", false, i + 1, "sum rule fails on a qualified instance"};
    }
  }
  for (long i = 0; i < rule_total; ++i) {
    const MapChainInstance inst = gen_map_chain_instance(rng, cfg.profile);
    const QVector zstar = rng.vector(inst.g.ny(), 3);
    const CoderivChainReport rep = coderivative_chain_rule_check(inst.f, inst.g, inst.x, inst.y, inst.z, zstar);
    if (rep.qualification_holds_graph_g || rep.qualification_holds_graph_f) {
      ++qualified_chain;
      if (!rep.rule_holds)
        return {"coderivative-calculus", false, rule_total + i + 1, "chain rule fails on a qualified instance"};
    }
  }
  for (long i = 0; i < linear_total; ++i) {
    const Index nx = static_cast<Index>(rng.uniform(1, 3));
    const Index ny = static_cast<Index>(rng.uniform(1, 3));
    QMatrix a = zero_matrix(ny, nx);
    for (Index r = 0; r < ny; ++r)
      for (Index c = 0; c < nx; ++c) a(r, c) = rng.uniform(-3, 3);
    const PolyMap lin = PolyMap::linear(a);
    const QVector x = rng.vector(nx, 2);
    const QVector ystar = rng.vector(ny, 3);
    const HPolyhedron cod = coderivative_at(lin, x, QVector(a * x), ystar);
    // {A'ystar} as an explicit singleton.
    const QVector target = a.transpose() * ystar;
    QMatrix eqm = identity_matrix(nx);
    const HPolyhedron singleton =
        HPolyhedron::make(nx, zero_matrix(0, nx), zero_vector(0), std::move(eqm), target);
    if (!hpoly_equal(cod, singleton))
      return {"coderivative-calculus", false, 2 * rule_total + i + 1, "linear-map coderivative is not {A'y*}"};
  }
  std::ostringstream detail;
  detail << qualified_sum << "/" << rule_total << " qualified sum, " << qualified_chain << "/" << rule_total
         << " qualified chain, " << linear_total << " linear maps";
  return {"coderivative-calculus", true, 2 * rule_total + linear_total, detail.str()};
}

CriterionResult check_projection_oracle(const SuiteConfig& cfg) {
  const long total = battery_count(cfg, 200);
  SeededRng rng(cfg.seed * 1000003 + 9);
  for (long i = 0; i < total; ++i) {
    GenProfile prof = cfg.profile;
    prof.dims = std::max<Index>(2, prof.dims);
    HPolyhedron p = rng.chance(2, 3) ? gen_polyhedron_planted(rng, prof).set : gen_polyhedron_free(rng, prof);
    if (p.dim() < 2) continue;
    const Index keep = static_cast<Index>(rng.uniform(1, p.dim() - 1));
    const HPolyhedron proj = project_fm(p, keep);
    for (int s = 0; s < 10; ++s) {
      const QVector y = rng.vector(keep, cfg.profile.coeff_bound + 1);
      // Pin the kept block and ask the LP whether a completion exists.
      const Index rest = p.dim() - keep;
      QMatrix a = zero_matrix(p.num_ineq(), rest);
      QVector b(p.num_ineq());
      for (Index r = 0; r < p.num_ineq(); ++r) {
        Rational shift = 0;
        for (Index j = 0; j < keep; ++j) shift += p.A()(r, j) * y(j);
        for (Index j = 0; j < rest; ++j) a(r, j) = p.A()(r, keep + j);
        b(r) = p.b()(r) - shift;
      }
      QMatrix em = zero_matrix(p.num_eq(), rest);
      QVector ev(p.num_eq());
      for (Index r = 0; r < p.num_eq(); ++r) {
        Rational shift = 0;
        for (Index j = 0; j < keep; ++j) shift += p.E()(r, j) * y(j);
        for (Index j = 0; j < rest; ++j) em(r, j) = p.E()(r, keep + j);
        ev(r) = p.e()(r) - shift;
      }
      const bool lifted_feasible =
          find_point(HPolyhedron::make(rest, std::move(a), std::move(b), std::move(em), std::move(ev))).has_value();
      if (proj.contains_point(y) != lifted_feasible)
        return {"projection-oracle", false, i + 1, "membership in the projection disagrees with the lifted LP"};
    }
  }
  return {"projection-oracle", true, total, "10 sample points per polyhedron"};
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteConfig& cfg, std::ostream* log) {
  std::vector<CriterionResult> results;
  const auto run = [&](CriterionResult (*fn)(const SuiteConfig&)) {
    CriterionResult r = fn(cfg);
    if (log) {
      (*log) << "[" << (results.size() + 1) << "/9] " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " ("
             << r.checked << " instances; " << r.detail << ")\n";
      log->flush();
    }
    results.push_back(std::move(r));
  };
  run(check_lp_certificate_closure);
  run(check_separation_iff);
  run(check_normal_cone_intersection);
  run(check_conjugate_identities);
  run(check_conjugate_sum_rule);
  run(check_strong_duality);
  run(check_subdifferential_calculus);
  run(check_coderivative_calculus);
  run(check_projection_oracle);
  return results;
}

}  // namespace polycalc
