// SPDX-License-Identifier: Apache-2.0

#include "polycalc/cones.hpp"

namespace polycalc {

GeneratedCone GeneratedCone::make(Index dim, std::vector<QVector> generators) {
  if (dim <= 0) throw std::invalid_argument("GeneratedCone: dimension must be positive");
  for (const QVector& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("GeneratedCone: generator dimension mismatch");
    if (is_zero_vector(g)) throw std::invalid_argument("GeneratedCone: zero generator");
  }
  return GeneratedCone{dim, std::move(generators)};
}

std::optional<GeneratedCone> normal_cone_at(const HPolyhedron& p, const QVector& x) {
  if (x.size() != p.dim()) throw std::invalid_argument("normal_cone_at: dimension mismatch");
  if (!p.contains_point(x)) return std::nullopt;
  std::vector<QVector> gens;
  for (Index i : p.active_rows(x)) gens.push_back(p.A().row(i).transpose());
  for (Index i = 0; i < p.num_eq(); ++i) {
    gens.push_back(p.E().row(i).transpose());
    gens.push_back(QVector(-p.E().row(i).transpose()));
  }
  return GeneratedCone::make(p.dim(), std::move(gens));
}

ConeMembership cone_contains(const GeneratedCone& k, const QVector& v) {
  if (v.size() != k.dim) throw std::invalid_argument("cone_contains: dimension mismatch");
  const Index ng = static_cast<Index>(k.generators.size());

  // Feasibility of  G'lambda = v, lambda >= 0  as an LP over lambda.
  QMatrix eqm(k.dim, ng);
  for (Index j = 0; j < ng; ++j)
    for (Index i = 0; i < k.dim; ++i) eqm(i, j) = k.generators[static_cast<std::size_t>(j)](i);
  QMatrix a = zero_matrix(ng, ng);
  for (Index j = 0; j < ng; ++j) a(j, j) = -1;

  const LPOutcome out = solve_lp(LPProblem::minimize(zero_vector(ng), a, zero_vector(ng), eqm, v));
  ConeMembership res;
  if (const auto* opt = as_optimal(out)) {
    res.contained = true;
    res.multipliers = opt->x;
    return res;
  }
  const auto* inf = as_infeasible(out);
  if (inf == nullptr) throw std::logic_error("cone_contains: membership LP cannot be unbounded");
  // Farkas: mu'G' = eta >= 0 and mu'v < 0, so w = -mu separates.
  res.separating_witness = -inf->farkas_eq;
  return res;
}

bool cone_equal(const GeneratedCone& k1, const GeneratedCone& k2) {
  if (k1.dim != k2.dim) throw std::invalid_argument("cone_equal: dimension mismatch");
  for (const QVector& g : k1.generators)
    if (!cone_contains(k2, g).contained) return false;
  for (const QVector& g : k2.generators)
    if (!cone_contains(k1, g).contained) return false;
  return true;
}

GeneratedCone cone_sum(const GeneratedCone& k1, const GeneratedCone& k2) {
  if (k1.dim != k2.dim) throw std::invalid_argument("cone_sum: dimension mismatch");
  std::vector<QVector> gens = k1.generators;
  gens.insert(gens.end(), k2.generators.begin(), k2.generators.end());
  return GeneratedCone::make(k1.dim, std::move(gens));
}

HPolyhedron cone_to_hpolyhedron(const GeneratedCone& k) {
  const Index ng = static_cast<Index>(k.generators.size());
  if (ng == 0) {
    // {0}: x = 0.
    QMatrix eqm = zero_matrix(k.dim, k.dim);
    for (Index i = 0; i < k.dim; ++i) eqm(i, i) = 1;
    return HPolyhedron::make(k.dim, zero_matrix(0, k.dim), zero_vector(0), std::move(eqm), zero_vector(k.dim));
  }
  // Variables (x, lambda): x - G'lambda = 0, lambda >= 0; project onto x.
  QMatrix eqm = zero_matrix(k.dim, k.dim + ng);
  for (Index i = 0; i < k.dim; ++i) {
    eqm(i, i) = 1;
    for (Index j = 0; j < ng; ++j) eqm(i, k.dim + j) = -k.generators[static_cast<std::size_t>(j)](i);
  }
  QMatrix a = zero_matrix(ng, k.dim + ng);
  for (Index j = 0; j < ng; ++j) a(j, k.dim + j) = -1;
  const HPolyhedron lifted =
      HPolyhedron::make(k.dim + ng, std::move(a), zero_vector(ng), std::move(eqm), zero_vector(k.dim));
  return project_fm(lifted, k.dim);
}

HPolyhedron cone_slice(const GeneratedCone& k, Index head, const QVector& tail) {
  if (head + tail.size() != k.dim) throw std::invalid_argument("cone_slice: head + tail must cover the cone dimension");
  const Index m = tail.size();
  const Index ng = static_cast<Index>(k.generators.size());

  // Variables (u, lambda): u = sum lambda_i g_i[head part],
  // tail = sum lambda_i g_i[tail part], lambda >= 0.
  QMatrix eqm = zero_matrix(head + m, head + ng);
  QVector eqv = zero_vector(head + m);
  for (Index i = 0; i < head; ++i) {
    eqm(i, i) = 1;
    for (Index j = 0; j < ng; ++j) eqm(i, head + j) = -k.generators[static_cast<std::size_t>(j)](i);
  }
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < ng; ++j) eqm(head + i, head + j) = k.generators[static_cast<std::size_t>(j)](head + i);
    eqv(head + i) = tail(i);
  }
  QMatrix a = zero_matrix(ng, head + ng);
  for (Index j = 0; j < ng; ++j) a(j, head + j) = -1;
  const HPolyhedron lifted =
      HPolyhedron::make(head + ng, std::move(a), zero_vector(ng), std::move(eqm), std::move(eqv));
  return project_fm(lifted, head);
}

IntersectionRuleReport normal_intersection_rule(const HPolyhedron& p, const HPolyhedron& omega, const QVector& x) {
  if (p.dim() != omega.dim()) throw std::invalid_argument("normal_intersection_rule: dimension mismatch");
  if (!p.contains_point(x) || !omega.contains_point(x))
    throw std::invalid_argument("normal_intersection_rule: point is not in the intersection");

  IntersectionRuleReport rep;
  const HPolyhedron both = intersect(p, omega);
  rep.cone_intersection = *normal_cone_at(both, x);
  const GeneratedCone cone_p = *normal_cone_at(p, x);
  const GeneratedCone cone_omega = *normal_cone_at(omega, x);
  rep.cone_sum = cone_sum(cone_p, cone_omega);

  QMatrix identity = zero_matrix(p.dim(), p.dim());
  for (Index i = 0; i < p.dim(); ++i) identity(i, i) = 1;
  rep.qualification_holds = meets_relative_interior(p, omega, identity).has_value();

  // The sum is always contained in the intersection cone.
  for (const QVector& g : rep.cone_sum.generators)
    if (!cone_contains(rep.cone_intersection, g).contained)
      throw std::logic_error("normal_intersection_rule: sum cone escapes the intersection cone");

  rep.rule_holds = cone_equal(rep.cone_intersection, rep.cone_sum);

  const std::size_t np = cone_p.generators.size();
  for (const QVector& g : rep.cone_intersection.generators) {
    const ConeMembership member = cone_contains(rep.cone_sum, g);
    if (!member.contained) continue;  // only possible when the rule fails
    NormalDecomposition dec;
    dec.target = g;
    dec.multipliers = member.multipliers;
    dec.part_p = zero_vector(p.dim());
    dec.part_omega = zero_vector(p.dim());
    for (std::size_t j = 0; j < rep.cone_sum.generators.size(); ++j) {
      const QVector contrib = member.multipliers(static_cast<Index>(j)) * rep.cone_sum.generators[j];
      if (j < np)
        dec.part_p += contrib;
      else
        dec.part_omega += contrib;
    }
    rep.decompositions.push_back(std::move(dec));
  }
  return rep;
}

}  // namespace polycalc
