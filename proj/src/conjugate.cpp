// SPDX-License-Identifier: Apache-2.0

#include "polycalc/conjugate.hpp"

#include "polycalc/errors.hpp"

namespace polycalc {

namespace {

QMatrix identity_matrix(Index n) {
  QMatrix m = zero_matrix(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

// Row bookkeeping for the composite system
//   (x, t1) in epi f,  (A x, t2) in epi g
// over variables (x, t1, t2). Inequality rows are ordered f-pieces,
// f-domain, g-pieces, g-domain; equality rows f-domain then g-domain.
struct CompositeSystem {
  QMatrix a;
  QVector b;
  QMatrix eqm;
  QVector eqv;
  Index fp, fd, gp, gd;  // inequality row counts per block
  Index fe, ge;          // equality row counts
};

CompositeSystem composite_system(const PolyhedralFunction& f, const PolyhedralFunction& g, const QMatrix& amat) {
  const Index n = f.dim();
  if (amat.cols() != n || amat.rows() != g.dim())
    throw std::invalid_argument("composite system: operator shape mismatch");
  CompositeSystem s;
  s.fp = static_cast<Index>(f.pieces().size());
  s.fd = f.domain().num_ineq();
  s.gp = static_cast<Index>(g.pieces().size());
  s.gd = g.domain().num_ineq();
  s.fe = f.domain().num_eq();
  s.ge = g.domain().num_eq();

  const Index width = n + 2;
  s.a = zero_matrix(s.fp + s.fd + s.gp + s.gd, width);
  s.b = zero_vector(s.a.rows());
  Index r = 0;
  for (Index i = 0; i < s.fp; ++i, ++r) {
    for (Index j = 0; j < n; ++j) s.a(r, j) = f.pieces()[static_cast<std::size_t>(i)].slope(j);
    s.a(r, n) = -1;
    s.b(r) = -f.pieces()[static_cast<std::size_t>(i)].offset;
  }
  for (Index i = 0; i < s.fd; ++i, ++r) {
    for (Index j = 0; j < n; ++j) s.a(r, j) = f.domain().A()(i, j);
    s.b(r) = f.domain().b()(i);
  }
  for (Index i = 0; i < s.gp; ++i, ++r) {
    const QVector pulled = amat.transpose() * g.pieces()[static_cast<std::size_t>(i)].slope;
    for (Index j = 0; j < n; ++j) s.a(r, j) = pulled(j);
    s.a(r, n + 1) = -1;
    s.b(r) = -g.pieces()[static_cast<std::size_t>(i)].offset;
  }
  for (Index i = 0; i < s.gd; ++i, ++r) {
    const QVector pulled = amat.transpose() * QVector(g.domain().A().row(i).transpose());
    for (Index j = 0; j < n; ++j) s.a(r, j) = pulled(j);
    s.b(r) = g.domain().b()(i);
  }

  s.eqm = zero_matrix(s.fe + s.ge, width);
  s.eqv = zero_vector(s.fe + s.ge);
  r = 0;
  for (Index i = 0; i < s.fe; ++i, ++r) {
    for (Index j = 0; j < n; ++j) s.eqm(r, j) = f.domain().E()(i, j);
    s.eqv(r) = f.domain().e()(i);
  }
  for (Index i = 0; i < s.ge; ++i, ++r) {
    const QVector pulled = amat.transpose() * QVector(g.domain().E().row(i).transpose());
    for (Index j = 0; j < n; ++j) s.eqm(r, j) = pulled(j);
    s.eqv(r) = g.domain().e()(i);
  }
  return s;
}

struct SplitExtraction {
  QVector xstar_f;   // f-side combination in x-space
  QVector wstar_g;   // g-side combination in the g space
  Rational part_f;   // bound certified for f
  Rational part_g;
};

// Reassembles both conjugate certificates from the optimal duals of the
// composite LP.
SplitExtraction extract_split(const CompositeSystem& s, const PolyhedralFunction& f, const PolyhedralFunction& g,
                              const LPOptimal& opt) {
  SplitExtraction out;
  out.xstar_f = zero_vector(f.dim());
  out.wstar_g = zero_vector(g.dim());
  out.part_f = 0;
  out.part_g = 0;
  Index r = 0;
  for (Index i = 0; i < s.fp; ++i, ++r) {
    out.xstar_f += opt.ineq_duals(r) * f.pieces()[static_cast<std::size_t>(i)].slope;
    out.part_f += opt.ineq_duals(r) * (-f.pieces()[static_cast<std::size_t>(i)].offset);
  }
  for (Index i = 0; i < s.fd; ++i, ++r) {
    out.xstar_f += opt.ineq_duals(r) * QVector(f.domain().A().row(i).transpose());
    out.part_f += opt.ineq_duals(r) * f.domain().b()(i);
  }
  for (Index i = 0; i < s.gp; ++i, ++r) {
    out.wstar_g += opt.ineq_duals(r) * g.pieces()[static_cast<std::size_t>(i)].slope;
    out.part_g += opt.ineq_duals(r) * (-g.pieces()[static_cast<std::size_t>(i)].offset);
  }
  for (Index i = 0; i < s.gd; ++i, ++r) {
    out.wstar_g += opt.ineq_duals(r) * QVector(g.domain().A().row(i).transpose());
    out.part_g += opt.ineq_duals(r) * g.domain().b()(i);
  }
  for (Index i = 0; i < s.fe; ++i) {
    out.xstar_f += opt.eq_duals(i) * QVector(f.domain().E().row(i).transpose());
    out.part_f += opt.eq_duals(i) * f.domain().e()(i);
  }
  for (Index i = 0; i < s.ge; ++i) {
    out.wstar_g += opt.eq_duals(s.fe + i) * QVector(g.domain().E().row(i).transpose());
    out.part_g += opt.eq_duals(s.fe + i) * g.domain().e()(i);
  }
  return out;
}

// Dual of the composite problem, over conjugate multipliers. Returns the
// problem plus the offsets needed to read the g-side combination back.
struct DualSystem {
  LPProblem lp;
  Index ofp, ofd, ofe, ogp, ogd, oge;  // variable offsets
};

DualSystem dual_system(const PolyhedralFunction& f, const PolyhedralFunction& g, const QMatrix& amat) {
  const Index n = f.dim();
  const Index fp = static_cast<Index>(f.pieces().size()), fd = f.domain().num_ineq(), fe = f.domain().num_eq();
  const Index gp = static_cast<Index>(g.pieces().size()), gd = g.domain().num_ineq(), ge = g.domain().num_eq();
  DualSystem d;
  d.ofp = 0;
  d.ofd = fp;
  d.ofe = fp + fd;
  d.ogp = fp + fd + fe;
  d.ogd = d.ogp + gp;
  d.oge = d.ogd + gd;
  const Index nv = d.oge + ge;

  // Stationarity in x plus the two normalizations sum(lambda pieces) = 1.
  QMatrix eqm = zero_matrix(n + 2, nv);
  QVector eqv = zero_vector(n + 2);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < fp; ++i) eqm(j, d.ofp + i) = f.pieces()[static_cast<std::size_t>(i)].slope(j);
    for (Index i = 0; i < fd; ++i) eqm(j, d.ofd + i) = f.domain().A()(i, j);
    for (Index i = 0; i < fe; ++i) eqm(j, d.ofe + i) = f.domain().E()(i, j);
  }
  for (Index i = 0; i < gp; ++i) {
    const QVector pulled = amat.transpose() * g.pieces()[static_cast<std::size_t>(i)].slope;
    for (Index j = 0; j < n; ++j) eqm(j, d.ogp + i) = pulled(j);
  }
  for (Index i = 0; i < gd; ++i) {
    const QVector pulled = amat.transpose() * QVector(g.domain().A().row(i).transpose());
    for (Index j = 0; j < n; ++j) eqm(j, d.ogd + i) = pulled(j);
  }
  for (Index i = 0; i < ge; ++i) {
    const QVector pulled = amat.transpose() * QVector(g.domain().E().row(i).transpose());
    for (Index j = 0; j < n; ++j) eqm(j, d.oge + i) = pulled(j);
  }
  for (Index i = 0; i < fp; ++i) eqm(n, d.ofp + i) = 1;
  eqv(n) = 1;
  for (Index i = 0; i < gp; ++i) eqm(n + 1, d.ogp + i) = 1;
  eqv(n + 1) = 1;

  // lambda >= 0 for all inequality-row multipliers.
  const Index nneg = fp + fd + gp + gd;
  QMatrix a = zero_matrix(nneg, nv);
  Index r = 0;
  for (Index i = 0; i < fp; ++i, ++r) a(r, d.ofp + i) = -1;
  for (Index i = 0; i < fd; ++i, ++r) a(r, d.ofd + i) = -1;
  for (Index i = 0; i < gp; ++i, ++r) a(r, d.ogp + i) = -1;
  for (Index i = 0; i < gd; ++i, ++r) a(r, d.ogd + i) = -1;

  // Maximize -phi_f - phi_g, i.e. minimize phi_f + phi_g.
  QVector c = zero_vector(nv);
  for (Index i = 0; i < fp; ++i) c(d.ofp + i) = -f.pieces()[static_cast<std::size_t>(i)].offset;
  for (Index i = 0; i < fd; ++i) c(d.ofd + i) = f.domain().b()(i);
  for (Index i = 0; i < fe; ++i) c(d.ofe + i) = f.domain().e()(i);
  for (Index i = 0; i < gp; ++i) c(d.ogp + i) = -g.pieces()[static_cast<std::size_t>(i)].offset;
  for (Index i = 0; i < gd; ++i) c(d.ogd + i) = g.domain().b()(i);
  for (Index i = 0; i < ge; ++i) c(d.oge + i) = g.domain().e()(i);

  d.lp = LPProblem::minimize(std::move(c), std::move(a), zero_vector(nneg), std::move(eqm), std::move(eqv));
  return d;
}

QVector dual_y_from(const DualSystem& d, const PolyhedralFunction& g, const QVector& x) {
  QVector w = zero_vector(g.dim());
  const Index gp = static_cast<Index>(g.pieces().size());
  for (Index i = 0; i < gp; ++i) w += x(d.ogp + i) * g.pieces()[static_cast<std::size_t>(i)].slope;
  for (Index i = 0; i < g.domain().num_ineq(); ++i)
    w += x(d.ogd + i) * QVector(g.domain().A().row(i).transpose());
  for (Index i = 0; i < g.domain().num_eq(); ++i)
    w += x(d.oge + i) * QVector(g.domain().E().row(i).transpose());
  return -w;
}

}  // namespace

ConjugateValue support_eval(const HPolyhedron& omega, const QVector& xstar) {
  const LPOutcome out = maximize_over(omega, xstar);
  ConjugateValue res;
  if (const auto* opt = as_optimal(out)) {
    res.value = ExtendedRational(-opt->value);
    res.maximizer = opt->x;
    return res;
  }
  if (const auto* ub = as_unbounded(out)) {
    res.value = ExtendedRational::plus_infinity();
    res.unbounded_ray = ub->ray;
    return res;
  }
  throw InfeasibleError("support_eval: empty set");
}

ConjugateValue conjugate_eval(const PolyhedralFunction& f, const QVector& xstar) {
  if (xstar.size() != f.dim()) throw std::invalid_argument("conjugate_eval: dimension mismatch");
  QVector lifted(f.dim() + 1);
  lifted.head(f.dim()) = xstar;
  lifted(f.dim()) = -1;
  ConjugateValue res = support_eval(epigraph(f), lifted);
  if (res.maximizer) res.maximizer = QVector(res.maximizer->head(f.dim()));
  if (res.unbounded_ray) res.unbounded_ray = QVector(res.unbounded_ray->head(f.dim()));
  return res;
}

ExtendedRational biconjugate_eval(const PolyhedralFunction& f, const QVector& x) {
  if (x.size() != f.dim()) throw std::invalid_argument("biconjugate_eval: dimension mismatch");
  const Index n = f.dim();
  const Index fp = static_cast<Index>(f.pieces().size());
  const Index fd = f.domain().num_ineq();
  const Index fe = f.domain().num_eq();
  // Variables (xstar, u, lambda_p, lambda_d, nu); the multipliers encode
  // membership of (xstar, u) in epi f*.
  const Index oxs = 0, ou = n, olp = n + 1, old_ = olp + fp, onu = old_ + fd;
  const Index nv = onu + fe;

  QMatrix eqm = zero_matrix(n + 1, nv);
  QVector eqv = zero_vector(n + 1);
  for (Index j = 0; j < n; ++j) {
    eqm(j, oxs + j) = -1;
    for (Index i = 0; i < fp; ++i) eqm(j, olp + i) = f.pieces()[static_cast<std::size_t>(i)].slope(j);
    for (Index i = 0; i < fd; ++i) eqm(j, old_ + i) = f.domain().A()(i, j);
    for (Index i = 0; i < fe; ++i) eqm(j, onu + i) = f.domain().E()(i, j);
  }
  for (Index i = 0; i < fp; ++i) eqm(n, olp + i) = 1;
  eqv(n) = 1;

  QMatrix a = zero_matrix(fp + fd + 1, nv);
  QVector b = zero_vector(fp + fd + 1);
  Index r = 0;
  for (Index i = 0; i < fp; ++i, ++r) a(r, olp + i) = -1;
  for (Index i = 0; i < fd; ++i, ++r) a(r, old_ + i) = -1;
  // The certified bound must stay below u:
  // -sum lambda_p d + sum lambda_d b + sum nu e - u <= 0.
  for (Index i = 0; i < fp; ++i) a(r, olp + i) = -f.pieces()[static_cast<std::size_t>(i)].offset;
  for (Index i = 0; i < fd; ++i) a(r, old_ + i) = f.domain().b()(i);
  for (Index i = 0; i < fe; ++i) a(r, onu + i) = f.domain().e()(i);
  a(r, ou) = -1;

  QVector c = zero_vector(nv);
  for (Index j = 0; j < n; ++j) c(oxs + j) = -x(j);
  c(ou) = 1;
  const LPOutcome out = solve_lp(LPProblem::minimize(c, a, b, eqm, eqv));
  if (const auto* opt = as_optimal(out)) return ExtendedRational(-opt->value);
  if (as_unbounded(out) != nullptr) return ExtendedRational::plus_infinity();
  throw std::logic_error("biconjugate_eval: epi f* encoding cannot be infeasible for proper f");
}

SupportSplit support_intersection_rule(const HPolyhedron& p, const HPolyhedron& omega, const QVector& xstar) {
  if (p.dim() != omega.dim() || xstar.size() != p.dim())
    throw std::invalid_argument("support_intersection_rule: dimension mismatch");

  const HPolyhedron both = intersect(p, omega);
  const LPOutcome out = maximize_over(both, xstar);
  if (as_unbounded(out) != nullptr)
    throw InfeasibleError("support_intersection_rule: support value is +inf");
  const auto* opt = as_optimal(out);
  if (opt == nullptr) throw InfeasibleError("support_intersection_rule: P and Omega do not intersect");

  // Multipliers of the concatenated system split by row ownership.
  SupportSplit res;
  res.value = -opt->value;
  res.qualification_holds = meets_relative_interior(p, omega, identity_matrix(p.dim())).has_value();
  res.xstar_p = zero_vector(p.dim());
  res.xstar_omega = zero_vector(p.dim());
  res.part_p = 0;
  res.part_omega = 0;
  for (Index i = 0; i < p.num_ineq(); ++i) {
    res.xstar_p += opt->ineq_duals(i) * QVector(p.A().row(i).transpose());
    res.part_p += opt->ineq_duals(i) * p.b()(i);
  }
  for (Index i = 0; i < omega.num_ineq(); ++i) {
    res.xstar_omega += opt->ineq_duals(p.num_ineq() + i) * QVector(omega.A().row(i).transpose());
    res.part_omega += opt->ineq_duals(p.num_ineq() + i) * omega.b()(i);
  }
  for (Index i = 0; i < p.num_eq(); ++i) {
    res.xstar_p += opt->eq_duals(i) * QVector(p.E().row(i).transpose());
    res.part_p += opt->eq_duals(i) * p.e()(i);
  }
  for (Index i = 0; i < omega.num_eq(); ++i) {
    res.xstar_omega += opt->eq_duals(p.num_eq() + i) * QVector(omega.E().row(i).transpose());
    res.part_omega += opt->eq_duals(p.num_eq() + i) * omega.e()(i);
  }

  if (QVector(res.xstar_p + res.xstar_omega) != xstar || res.part_p + res.part_omega != res.value)
    throw std::logic_error("support_intersection_rule: dual split fails to recombine");
  const ConjugateValue sp = support_eval(p, res.xstar_p);
  const ConjugateValue so = support_eval(omega, res.xstar_omega);
  if (sp.value != ExtendedRational(res.part_p) || so.value != ExtendedRational(res.part_omega))
    throw std::logic_error("support_intersection_rule: parts are not the exact support values");
  return res;
}

ConjugateSumResult conjugate_sum_rule(const PolyhedralFunction& f, const PolyhedralFunction& g,
                                      const QVector& xstar) {
  if (f.dim() != g.dim() || xstar.size() != f.dim())
    throw std::invalid_argument("conjugate_sum_rule: dimension mismatch");
  if (!meets_relative_interior(f.domain(), g.domain(), identity_matrix(f.dim())))
    throw QualificationError("conjugate_sum_rule: qualification dom f cap ri(dom g) violated");

  const QMatrix id = identity_matrix(f.dim());
  const CompositeSystem s = composite_system(f, g, id);
  QVector c = zero_vector(f.dim() + 2);
  for (Index j = 0; j < f.dim(); ++j) c(j) = -xstar(j);
  c(f.dim()) = 1;
  c(f.dim() + 1) = 1;
  const LPOutcome out = solve_lp(LPProblem::minimize(c, s.a, s.b, s.eqm, s.eqv));

  ConjugateSumResult res;
  if (as_unbounded(out) != nullptr) {
    res.value = ExtendedRational::plus_infinity();
    return res;
  }
  const auto* opt = as_optimal(out);
  if (opt == nullptr) throw std::logic_error("conjugate_sum_rule: composite LP cannot be infeasible");
  const SplitExtraction split = extract_split(s, f, g, *opt);
  res.value = ExtendedRational(-opt->value);
  res.xstar_f = split.xstar_f;
  res.xstar_g = split.wstar_g;  // A is the identity here
  res.part_f = split.part_f;
  res.part_g = split.part_g;

  if (QVector(*res.xstar_f + *res.xstar_g) != xstar || ExtendedRational(*res.part_f + *res.part_g) != res.value)
    throw std::logic_error("conjugate_sum_rule: dual split fails to recombine");
  if (conjugate_eval(f, *res.xstar_f).value != ExtendedRational(*res.part_f) ||
      conjugate_eval(g, *res.xstar_g).value != ExtendedRational(*res.part_g))
    throw std::logic_error("conjugate_sum_rule: parts are not the exact conjugate values");
  return res;
}

ConjugateChainResult conjugate_chain_rule(const PolyhedralFunction& g, const QMatrix& a, const QVector& xstar) {
  if (a.rows() != g.dim()) throw std::invalid_argument("conjugate_chain_rule: matrix rows must match dim(g)");
  const Index n = a.cols();
  if (xstar.size() != n) throw std::invalid_argument("conjugate_chain_rule: xstar dimension mismatch");
  const HPolyhedron pre = affine_preimage(g.domain(), a);
  if (is_empty(pre).empty) throw QualificationError("conjugate_chain_rule: the range of A misses dom g");

  // max <xstar, x> - t over (A x, t) in epi g.
  const Index gp = static_cast<Index>(g.pieces().size());
  const Index gd = g.domain().num_ineq();
  const Index ge = g.domain().num_eq();
  QMatrix am = zero_matrix(gp + gd, n + 1);
  QVector bm = zero_vector(gp + gd);
  for (Index i = 0; i < gp; ++i) {
    const QVector pulled = a.transpose() * g.pieces()[static_cast<std::size_t>(i)].slope;
    for (Index j = 0; j < n; ++j) am(i, j) = pulled(j);
    am(i, n) = -1;
    bm(i) = -g.pieces()[static_cast<std::size_t>(i)].offset;
  }
  for (Index i = 0; i < gd; ++i) {
    const QVector pulled = a.transpose() * QVector(g.domain().A().row(i).transpose());
    for (Index j = 0; j < n; ++j) am(gp + i, j) = pulled(j);
    bm(gp + i) = g.domain().b()(i);
  }
  QMatrix em = zero_matrix(ge, n + 1);
  QVector ev = zero_vector(ge);
  for (Index i = 0; i < ge; ++i) {
    const QVector pulled = a.transpose() * QVector(g.domain().E().row(i).transpose());
    for (Index j = 0; j < n; ++j) em(i, j) = pulled(j);
    ev(i) = g.domain().e()(i);
  }
  QVector c = zero_vector(n + 1);
  for (Index j = 0; j < n; ++j) c(j) = -xstar(j);
  c(n) = 1;
  const LPOutcome out = solve_lp(LPProblem::minimize(c, am, bm, em, ev));

  ConjugateChainResult res;
  if (as_unbounded(out) != nullptr) {
    res.value = ExtendedRational::plus_infinity();
    return res;
  }
  const auto* opt = as_optimal(out);
  if (opt == nullptr) throw std::logic_error("conjugate_chain_rule: LP cannot be infeasible with a nonempty preimage");
  res.value = ExtendedRational(-opt->value);

  QVector w = zero_vector(g.dim());
  Rational bound = 0;
  for (Index i = 0; i < gp; ++i) {
    w += opt->ineq_duals(i) * g.pieces()[static_cast<std::size_t>(i)].slope;
    bound += opt->ineq_duals(i) * (-g.pieces()[static_cast<std::size_t>(i)].offset);
  }
  for (Index i = 0; i < gd; ++i) {
    w += opt->ineq_duals(gp + i) * QVector(g.domain().A().row(i).transpose());
    bound += opt->ineq_duals(gp + i) * g.domain().b()(i);
  }
  for (Index i = 0; i < ge; ++i) {
    w += opt->eq_duals(i) * QVector(g.domain().E().row(i).transpose());
    bound += opt->eq_duals(i) * g.domain().e()(i);
  }
  if (QVector(a.transpose() * w) != xstar || ExtendedRational(bound) != res.value)
    throw std::logic_error("conjugate_chain_rule: dual witness fails A'y = x or the value equation");
  if (conjugate_eval(g, w).value != res.value)
    throw std::logic_error("conjugate_chain_rule: witness conjugate value mismatch");
  res.ystar = w;
  return res;
}

InfConvResult infimal_convolution_eval(const PolyhedralFunction& f, const PolyhedralFunction& g, const QVector& x) {
  if (f.dim() != g.dim() || x.size() != f.dim())
    throw std::invalid_argument("infimal_convolution_eval: dimension mismatch");
  const Index n = f.dim();
  // Variables (u, v, t1, t2): (u, t1) in epi f, (v, t2) in epi g, u + v = x.
  const Index ou = 0, ov = n, ot1 = 2 * n, ot2 = 2 * n + 1;
  const Index nv = 2 * n + 2;
  const Index fp = static_cast<Index>(f.pieces().size()), fd = f.domain().num_ineq(), fe = f.domain().num_eq();
  const Index gp = static_cast<Index>(g.pieces().size()), gd = g.domain().num_ineq(), ge = g.domain().num_eq();

  QMatrix a = zero_matrix(fp + fd + gp + gd, nv);
  QVector b = zero_vector(a.rows());
  Index r = 0;
  for (Index i = 0; i < fp; ++i, ++r) {
    for (Index j = 0; j < n; ++j) a(r, ou + j) = f.pieces()[static_cast<std::size_t>(i)].slope(j);
    a(r, ot1) = -1;
    b(r) = -f.pieces()[static_cast<std::size_t>(i)].offset;
  }
  for (Index i = 0; i < fd; ++i, ++r) {
    for (Index j = 0; j < n; ++j) a(r, ou + j) = f.domain().A()(i, j);
    b(r) = f.domain().b()(i);
  }
  for (Index i = 0; i < gp; ++i, ++r) {
    for (Index j = 0; j < n; ++j) a(r, ov + j) = g.pieces()[static_cast<std::size_t>(i)].slope(j);
    a(r, ot2) = -1;
    b(r) = -g.pieces()[static_cast<std::size_t>(i)].offset;
  }
  for (Index i = 0; i < gd; ++i, ++r) {
    for (Index j = 0; j < n; ++j) a(r, ov + j) = g.domain().A()(i, j);
    b(r) = g.domain().b()(i);
  }
  QMatrix eqm = zero_matrix(fe + ge + n, nv);
  QVector eqv = zero_vector(fe + ge + n);
  r = 0;
  for (Index i = 0; i < fe; ++i, ++r) {
    for (Index j = 0; j < n; ++j) eqm(r, ou + j) = f.domain().E()(i, j);
    eqv(r) = f.domain().e()(i);
  }
  for (Index i = 0; i < ge; ++i, ++r) {
    for (Index j = 0; j < n; ++j) eqm(r, ov + j) = g.domain().E()(i, j);
    eqv(r) = g.domain().e()(i);
  }
  for (Index i = 0; i < n; ++i, ++r) {
    eqm(r, ou + i) = 1;
    eqm(r, ov + i) = 1;
    eqv(r) = x(i);
  }
  QVector c = zero_vector(nv);
  c(ot1) = 1;
  c(ot2) = 1;
  const LPOutcome out = solve_lp(LPProblem::minimize(c, a, b, eqm, eqv));

  InfConvResult res;
  if (const auto* opt = as_optimal(out)) {
    res.value = ExtendedRational(opt->value);
    res.split_u = QVector(opt->x.segment(ou, n));
    res.split_v = QVector(opt->x.segment(ov, n));
    return res;
  }
  if (as_unbounded(out) != nullptr) {
    res.value = ExtendedRational::minus_infinity();
    return res;
  }
  res.value = ExtendedRational::plus_infinity();
  return res;
}

namespace {

ExtendedRational primal_value(const LPOutcome& out, std::optional<QVector>* attainer, Index n) {
  if (const auto* opt = as_optimal(out)) {
    if (attainer) *attainer = QVector(opt->x.head(n));
    return ExtendedRational(opt->value);
  }
  if (as_unbounded(out) != nullptr) return ExtendedRational::minus_infinity();
  return ExtendedRational::plus_infinity();
}

}  // namespace

DualityValues weak_duality_gap(const PolyhedralFunction& f, const PolyhedralFunction& g, const QMatrix& a) {
  const CompositeSystem s = composite_system(f, g, a);
  QVector c = zero_vector(f.dim() + 2);
  c(f.dim()) = 1;
  c(f.dim() + 1) = 1;
  const LPOutcome primal = solve_lp(LPProblem::minimize(c, s.a, s.b, s.eqm, s.eqv));
  DualityValues res;
  res.p_hat = primal_value(primal, nullptr, f.dim());

  const DualSystem d = dual_system(f, g, a);
  const LPOutcome dual = solve_lp(d.lp);
  if (const auto* opt = as_optimal(dual))
    res.d_hat = ExtendedRational(-opt->value);
  else if (as_unbounded(dual) != nullptr)
    res.d_hat = ExtendedRational::plus_infinity();
  else
    res.d_hat = ExtendedRational::minus_infinity();

  if (res.p_hat < res.d_hat) throw std::logic_error("weak_duality_gap: p_hat < d_hat");
  return res;
}

DualityCertificate fenchel_solve(const PolyhedralFunction& f, const PolyhedralFunction& g, const QMatrix& a) {
  const CompositeSystem s = composite_system(f, g, a);
  QVector c = zero_vector(f.dim() + 2);
  c(f.dim()) = 1;
  c(f.dim() + 1) = 1;
  const LPOutcome primal = solve_lp(LPProblem::minimize(c, s.a, s.b, s.eqm, s.eqv));

  DualityCertificate cert;
  cert.p_hat = primal_value(primal, &cert.primal_x, f.dim());

  const DualSystem d = dual_system(f, g, a);
  const LPOutcome dual = solve_lp(d.lp);
  if (const auto* opt = as_optimal(dual)) {
    cert.d_hat = ExtendedRational(-opt->value);
    cert.dual_y = dual_y_from(d, g, opt->x);
  } else if (as_unbounded(dual) != nullptr) {
    cert.d_hat = ExtendedRational::plus_infinity();
  } else {
    cert.d_hat = ExtendedRational::minus_infinity();
  }

  // Qualification dom(g o A) cap ri(dom f), and the equivalent image form
  // dom g cap A(ri(dom f)) computed through the lifted (y, x) system.
  const HPolyhedron pre = affine_preimage(g.domain(), a);
  cert.qualification_holds =
      !is_empty(pre).empty &&
      meets_relative_interior(pre, f.domain(), identity_matrix(f.dim())).has_value();
  {
    const Index m = g.dim(), n = f.dim();
    QMatrix link = zero_matrix(m, m + n);
    for (Index i = 0; i < m; ++i) {
      link(i, i) = 1;
      for (Index j = 0; j < n; ++j) link(i, m + j) = -a(i, j);
    }
    const HPolyhedron graph_like =
        intersect(HPolyhedron::make(m + n, zero_matrix(0, m + n), zero_vector(0), std::move(link), zero_vector(m)),
                  embed(g.domain(), m + n, 0));
    QMatrix pick_x = zero_matrix(n, m + n);
    for (Index j = 0; j < n; ++j) pick_x(j, m + j) = 1;
    cert.image_qualification_holds = meets_relative_interior(graph_like, f.domain(), pick_x).has_value();
  }
  if (cert.qualification_holds != cert.image_qualification_holds)
    throw std::logic_error("fenchel_solve: the two qualification routes disagree");

  cert.equality = cert.p_hat.is_finite() && cert.d_hat.is_finite() && cert.p_hat == cert.d_hat;

  if (cert.p_hat.is_minus_infinity() && !cert.d_hat.is_minus_infinity())
    throw std::logic_error("fenchel_solve: unbounded primal demands an infeasible dual");
  if (cert.p_hat < cert.d_hat) throw std::logic_error("fenchel_solve: weak duality violated");

  if (cert.qualification_holds && cert.p_hat.is_finite()) {
    if (!cert.equality || !cert.dual_y)
      throw std::logic_error("fenchel_solve: strong duality must hold under the qualification");
    // Attainment check: -f*(A'y) - g*(-y) equals d_hat exactly.
    const QVector aty = a.transpose() * (*cert.dual_y);
    const ConjugateValue fstar = conjugate_eval(f, aty);
    const ConjugateValue gstar = conjugate_eval(g, QVector(-(*cert.dual_y)));
    if (!fstar.value.is_finite() || !gstar.value.is_finite() ||
        ExtendedRational(-(fstar.value.finite() + gstar.value.finite())) != cert.d_hat)
      throw std::logic_error("fenchel_solve: dual witness does not attain d_hat");
  }
  return cert;
}

}  // namespace polycalc
