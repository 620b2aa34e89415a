// SPDX-License-Identifier: Apache-2.0

#include "polycalc/functions.hpp"

#include "polycalc/errors.hpp"

namespace polycalc {

PolyhedralFunction PolyhedralFunction::make(Index n, std::vector<AffinePiece> pieces, HPolyhedron domain) {
  if (n <= 0) throw std::invalid_argument("PolyhedralFunction: dimension must be positive");
  if (pieces.empty()) throw std::invalid_argument("PolyhedralFunction: at least one affine piece required");
  if (domain.dim() != n) throw std::invalid_argument("PolyhedralFunction: domain dimension mismatch");
  for (const auto& piece : pieces)
    if (piece.slope.size() != n) throw std::invalid_argument("PolyhedralFunction: piece dimension mismatch");
  if (is_empty(domain).empty) throw std::invalid_argument("PolyhedralFunction: empty domain (improper function)");
  return PolyhedralFunction(n, std::move(pieces), std::move(domain));
}

PolyhedralFunction PolyhedralFunction::max_affine(Index n, std::vector<AffinePiece> pieces) {
  return make(n, std::move(pieces), HPolyhedron(n));
}

PolyhedralFunction PolyhedralFunction::indicator(HPolyhedron domain) {
  const Index n = domain.dim();
  return make(n, {AffinePiece{zero_vector(n), 0}}, std::move(domain));
}

ExtendedRational PolyhedralFunction::eval(const QVector& x) const {
  if (x.size() != n_) throw std::invalid_argument("eval: dimension mismatch");
  if (!domain_.contains_point(x)) return ExtendedRational::plus_infinity();
  Rational best = pieces_[0].offset;
  for (Index j = 0; j < n_; ++j) best += pieces_[0].slope(j) * x(j);
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    Rational val = pieces_[i].offset;
    for (Index j = 0; j < n_; ++j) val += pieces_[i].slope(j) * x(j);
    if (val > best) best = val;
  }
  return ExtendedRational(best);
}

std::vector<std::size_t> PolyhedralFunction::active_pieces(const QVector& x) const {
  const ExtendedRational fx = eval(x);
  if (!fx.is_finite()) throw std::invalid_argument("active_pieces: point outside the domain");
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    Rational val = pieces_[i].offset;
    for (Index j = 0; j < n_; ++j) val += pieces_[i].slope(j) * x(j);
    if (val == fx.finite()) act.push_back(i);
  }
  return act;
}

HPolyhedron epigraph(const PolyhedralFunction& f) {
  const Index n = f.dim();
  const Index np = static_cast<Index>(f.pieces().size());
  const HPolyhedron& dom = f.domain();
  QMatrix a = zero_matrix(np + dom.num_ineq(), n + 1);
  QVector b = zero_vector(np + dom.num_ineq());
  for (Index i = 0; i < np; ++i) {
    for (Index j = 0; j < n; ++j) a(i, j) = f.pieces()[static_cast<std::size_t>(i)].slope(j);
    a(i, n) = -1;
    b(i) = -f.pieces()[static_cast<std::size_t>(i)].offset;
  }
  for (Index i = 0; i < dom.num_ineq(); ++i) {
    for (Index j = 0; j < n; ++j) a(np + i, j) = dom.A()(i, j);
    b(np + i) = dom.b()(i);
  }
  QMatrix eqm = zero_matrix(dom.num_eq(), n + 1);
  for (Index i = 0; i < dom.num_eq(); ++i)
    for (Index j = 0; j < n; ++j) eqm(i, j) = dom.E()(i, j);
  return HPolyhedron::make(n + 1, std::move(a), std::move(b), std::move(eqm), dom.e());
}

PolyhedralFunction sum(const PolyhedralFunction& f1, const PolyhedralFunction& f2) {
  if (f1.dim() != f2.dim()) throw std::invalid_argument("sum: dimension mismatch");
  std::vector<AffinePiece> pieces;
  for (const auto& p1 : f1.pieces())
    for (const auto& p2 : f2.pieces()) pieces.push_back(AffinePiece{p1.slope + p2.slope, p1.offset + p2.offset});
  return PolyhedralFunction::make(f1.dim(), std::move(pieces), intersect(f1.domain(), f2.domain()));
}

PolyhedralFunction compose_linear(const PolyhedralFunction& f, const QMatrix& a) {
  if (a.rows() != f.dim()) throw std::invalid_argument("compose_linear: matrix rows must match dim(f)");
  if (a.cols() <= 0) throw std::invalid_argument("compose_linear: matrix must have columns");
  std::vector<AffinePiece> pieces;
  for (const auto& p : f.pieces()) pieces.push_back(AffinePiece{a.transpose() * p.slope, p.offset});
  HPolyhedron dom = affine_preimage(f.domain(), a);
  if (is_empty(dom).empty)
    throw QualificationError("compose_linear: the range of A misses dom f");
  return PolyhedralFunction::make(a.cols(), std::move(pieces), std::move(dom));
}

HPolyhedron subdifferential_at(const PolyhedralFunction& f, const QVector& x) {
  const ExtendedRational fx = f.eval(x);
  if (!fx.is_finite()) throw std::invalid_argument("subdifferential_at: point outside the domain");
  QVector lifted(f.dim() + 1);
  lifted.head(f.dim()) = x;
  lifted(f.dim()) = fx.finite();
  const auto cone = normal_cone_at(epigraph(f), lifted);
  if (!cone) throw std::logic_error("subdifferential_at: (x, f(x)) escaped the epigraph");
  QVector minus_one(1);
  minus_one(0) = -1;
  return cone_slice(*cone, f.dim(), minus_one);
}

HPolyhedron subdifferential_via_active_pieces(const PolyhedralFunction& f, const QVector& x) {
  const Index n = f.dim();
  const std::vector<std::size_t> act = f.active_pieces(x);
  const Index na = static_cast<Index>(act.size());

  // conv{active slopes} as an H-polyhedron: project out the weights of
  // (u, mu): u = sum mu_i c_i, sum mu = 1, mu >= 0.
  QMatrix eqm = zero_matrix(n + 1, n + na);
  QVector eqv = zero_vector(n + 1);
  for (Index i = 0; i < n; ++i) {
    eqm(i, i) = 1;
    for (Index j = 0; j < na; ++j) eqm(i, n + j) = -f.pieces()[act[static_cast<std::size_t>(j)]].slope(i);
  }
  for (Index j = 0; j < na; ++j) eqm(n, n + j) = 1;
  eqv(n) = 1;
  QMatrix a = zero_matrix(na, n + na);
  for (Index j = 0; j < na; ++j) a(j, n + j) = -1;
  const HPolyhedron hull =
      project_fm(HPolyhedron::make(n + na, std::move(a), zero_vector(na), std::move(eqm), std::move(eqv)), n);

  const auto dom_cone = normal_cone_at(f.domain(), x);
  if (!dom_cone) throw std::logic_error("subdifferential_via_active_pieces: point escaped the domain");
  return minkowski_sum(hull, cone_to_hpolyhedron(*dom_cone));
}

SubdiffSumReport subdiff_sum_rule_check(const PolyhedralFunction& f1, const PolyhedralFunction& f2,
                                        const QVector& x) {
  if (f1.dim() != f2.dim()) throw std::invalid_argument("subdiff_sum_rule_check: dimension mismatch");
  if (!f1.domain().contains_point(x) || !f2.domain().contains_point(x))
    throw std::invalid_argument("subdiff_sum_rule_check: point outside the common domain");

  QMatrix identity = zero_matrix(f1.dim(), f1.dim());
  for (Index i = 0; i < f1.dim(); ++i) identity(i, i) = 1;
  const bool qual = meets_relative_interior(f1.domain(), f2.domain(), identity).has_value();

  HPolyhedron left = subdifferential_at(sum(f1, f2), x);
  HPolyhedron right = minkowski_sum(subdifferential_at(f1, x), subdifferential_at(f2, x));
  if (!hpoly_contains(right, left))
    throw std::logic_error("subdiff_sum_rule_check: sum of subdifferentials escapes the left side");
  const bool rule = hpoly_contains(left, right);
  return SubdiffSumReport{qual, rule, std::move(left), std::move(right)};
}

SubdiffChainReport subdiff_chain_rule(const PolyhedralFunction& f, const QMatrix& a, const QVector& x) {
  const PolyhedralFunction composed = compose_linear(f, a);
  if (x.size() != composed.dim()) throw std::invalid_argument("subdiff_chain_rule: dimension mismatch");
  const QVector image = a * x;
  if (!f.domain().contains_point(image))
    throw std::invalid_argument("subdiff_chain_rule: A x outside dom f");

  HPolyhedron left = subdifferential_at(composed, x);
  HPolyhedron right = affine_image(subdifferential_at(f, image), a.transpose(), zero_vector(a.cols()));
  if (!hpoly_contains(right, left))
    throw std::logic_error("subdiff_chain_rule: A'(df(Ax)) escapes the left side");
  const bool rule = hpoly_contains(left, right);
  return SubdiffChainReport{rule, std::move(left), std::move(right)};
}

}  // namespace polycalc
