// SPDX-License-Identifier: Apache-2.0

#include "polycalc/setvalued.hpp"

namespace polycalc {

namespace {

// Selection matrix picking the given coordinates of R^total.
QMatrix selection(Index total, const std::vector<Index>& cols) {
  QMatrix m = zero_matrix(static_cast<Index>(cols.size()), total);
  for (std::size_t i = 0; i < cols.size(); ++i) m(static_cast<Index>(i), cols[i]) = 1;
  return m;
}

std::vector<Index> range_block(Index start, Index len) {
  std::vector<Index> idx;
  for (Index i = 0; i < len; ++i) idx.push_back(start + i);
  return idx;
}

QVector concat(const QVector& a, const QVector& b) {
  QVector r(a.size() + b.size());
  r.head(a.size()) = a;
  r.tail(b.size()) = b;
  return r;
}

}  // namespace

PolyMap PolyMap::make(Index nx, Index ny, HPolyhedron graph) {
  if (nx <= 0 || ny <= 0) throw std::invalid_argument("PolyMap: dimensions must be positive");
  if (graph.dim() != nx + ny) throw std::invalid_argument("PolyMap: graph dimension must be nx + ny");
  if (is_empty(graph).empty) throw std::invalid_argument("PolyMap: empty graph");
  return PolyMap(nx, ny, std::move(graph));
}

PolyMap PolyMap::linear(const QMatrix& a) {
  const Index ny = a.rows(), nx = a.cols();
  // y - A x = 0.
  QMatrix eqm = zero_matrix(ny, nx + ny);
  for (Index i = 0; i < ny; ++i) {
    eqm(i, nx + i) = 1;
    for (Index j = 0; j < nx; ++j) eqm(i, j) = -a(i, j);
  }
  return make(nx, ny, HPolyhedron::make(nx + ny, zero_matrix(0, nx + ny), zero_vector(0), std::move(eqm),
                                        zero_vector(ny)));
}

PolyMap PolyMap::identity(Index n) {
  QMatrix id = zero_matrix(n, n);
  for (Index i = 0; i < n; ++i) id(i, i) = 1;
  return linear(id);
}

bool PolyMap::graph_contains(const QVector& x, const QVector& y) const {
  if (x.size() != nx_ || y.size() != ny_) throw std::invalid_argument("graph_contains: dimension mismatch");
  return graph_.contains_point(concat(x, y));
}

HPolyhedron coderivative_at(const PolyMap& f, const QVector& x, const QVector& y, const QVector& ystar) {
  if (ystar.size() != f.ny()) throw std::invalid_argument("coderivative_at: ystar dimension mismatch");
  if (!f.graph_contains(x, y)) throw std::invalid_argument("coderivative_at: point is not on the graph");
  const auto cone = normal_cone_at(f.graph(), concat(x, y));
  return cone_slice(*cone, f.nx(), QVector(-ystar));
}

PolyMap map_sum(const PolyMap& f1, const PolyMap& f2) {
  if (f1.nx() != f2.nx() || f1.ny() != f2.ny()) throw std::invalid_argument("map_sum: dimension mismatch");
  const Index nx = f1.nx(), ny = f1.ny();
  // Variables (x, y, y1, y2).
  const Index total = nx + 3 * ny;
  const HPolyhedron c1 = affine_preimage(f1.graph(), selection(total, [&] {
                                           auto idx = range_block(0, nx);
                                           auto t = range_block(nx + ny, ny);
                                           idx.insert(idx.end(), t.begin(), t.end());
                                           return idx;
                                         }()));
  const HPolyhedron c2 = affine_preimage(f2.graph(), selection(total, [&] {
                                           auto idx = range_block(0, nx);
                                           auto t = range_block(nx + 2 * ny, ny);
                                           idx.insert(idx.end(), t.begin(), t.end());
                                           return idx;
                                         }()));
  // y = y1 + y2.
  QMatrix eqm = zero_matrix(ny, total);
  for (Index i = 0; i < ny; ++i) {
    eqm(i, nx + i) = 1;
    eqm(i, nx + ny + i) = -1;
    eqm(i, nx + 2 * ny + i) = -1;
  }
  const HPolyhedron link = HPolyhedron::make(total, zero_matrix(0, total), zero_vector(0), std::move(eqm),
                                             zero_vector(ny));
  const HPolyhedron graph = project_fm(intersect(intersect(c1, c2), link), nx + ny);
  return PolyMap::make(nx, ny, graph);
}

PolyMap map_compose(const PolyMap& f, const PolyMap& g) {
  if (f.ny() != g.nx()) throw std::invalid_argument("map_compose: inner dimensions do not match");
  const Index nx = f.nx(), ny = f.ny(), nz = g.ny();
  // Variables (x, z, y); keep (x, z).
  const Index total = nx + nz + ny;
  const HPolyhedron cf = affine_preimage(f.graph(), selection(total, [&] {
                                           auto idx = range_block(0, nx);
                                           auto t = range_block(nx + nz, ny);
                                           idx.insert(idx.end(), t.begin(), t.end());
                                           return idx;
                                         }()));
  const HPolyhedron cg = affine_preimage(g.graph(), selection(total, [&] {
                                           auto idx = range_block(nx + nz, ny);
                                           auto t = range_block(nx, nz);
                                           idx.insert(idx.end(), t.begin(), t.end());
                                           return idx;
                                         }()));
  const HPolyhedron graph = project_fm(intersect(cf, cg), nx + nz);
  return PolyMap::make(nx, nz, graph);
}

std::optional<SplitPoint> find_split(const PolyMap& f1, const PolyMap& f2, const QVector& x, const QVector& y,
                                     const QVector& objective_weights) {
  if (f1.nx() != f2.nx() || f1.ny() != f2.ny()) throw std::invalid_argument("find_split: dimension mismatch");
  const Index ny = f1.ny();
  if (objective_weights.size() != ny) throw std::invalid_argument("find_split: weight dimension mismatch");

  // Variables (y1, y2) with x pinned; constraints from both graphs plus
  // y1 + y2 = y.
  const Index total = 2 * ny;
  auto pin_graph = [&](const PolyMap& f, Index offset) {
    const HPolyhedron& g = f.graph();
    QMatrix a = zero_matrix(g.num_ineq(), total);
    QVector b(g.num_ineq());
    for (Index i = 0; i < g.num_ineq(); ++i) {
      Rational shift = 0;
      for (Index j = 0; j < f.nx(); ++j) shift += g.A()(i, j) * x(j);
      for (Index j = 0; j < ny; ++j) a(i, offset + j) = g.A()(i, f.nx() + j);
      b(i) = g.b()(i) - shift;
    }
    QMatrix eqm = zero_matrix(g.num_eq(), total);
    QVector eqv(g.num_eq());
    for (Index i = 0; i < g.num_eq(); ++i) {
      Rational shift = 0;
      for (Index j = 0; j < f.nx(); ++j) shift += g.E()(i, j) * x(j);
      for (Index j = 0; j < ny; ++j) eqm(i, offset + j) = g.E()(i, f.nx() + j);
      eqv(i) = g.e()(i) - shift;
    }
    return HPolyhedron::make(total, std::move(a), std::move(b), std::move(eqm), std::move(eqv));
  };
  HPolyhedron feasible = intersect(pin_graph(f1, 0), pin_graph(f2, ny));
  QMatrix link = zero_matrix(ny, total);
  for (Index i = 0; i < ny; ++i) {
    link(i, i) = 1;
    link(i, ny + i) = 1;
  }
  feasible = intersect(feasible, HPolyhedron::make(total, zero_matrix(0, total), zero_vector(0), std::move(link), y));

  QVector obj = zero_vector(total);
  obj.head(ny) = objective_weights;
  const LPOutcome out = solve_lp(LPProblem::minimize(obj, feasible.A(), feasible.b(), feasible.E(), feasible.e()));
  QVector point;
  if (const auto* opt = as_optimal(out))
    point = opt->x;
  else if (const auto* ub = as_unbounded(out))
    point = ub->feasible_point;
  else
    return std::nullopt;
  return SplitPoint{x, y, point.head(ny), point.tail(ny)};
}

CoderivSumReport coderivative_sum_rule_check(const PolyMap& f1, const PolyMap& f2, const SplitPoint& s,
                                             const QVector& ystar) {
  if (f1.nx() != f2.nx() || f1.ny() != f2.ny()) throw std::invalid_argument("coderivative_sum_rule_check: dimension mismatch");
  const Index nx = f1.nx(), ny = f1.ny();
  if (s.y1.size() != ny || s.y2.size() != ny || s.y.size() != ny || s.x.size() != nx ||
      QVector(s.y1 + s.y2) != s.y || !f1.graph_contains(s.x, s.y1) || !f2.graph_contains(s.x, s.y2))
    throw std::invalid_argument("coderivative_sum_rule_check: invalid split");

  // Qualification: some (x, y1, y2) with (x, y1) in gph F1 and
  // (x, y2) in ri(gph F2).
  const Index total = nx + 2 * ny;
  const HPolyhedron c = affine_preimage(f1.graph(), selection(total, [&] {
                                          auto idx = range_block(0, nx);
                                          auto t = range_block(nx, ny);
                                          idx.insert(idx.end(), t.begin(), t.end());
                                          return idx;
                                        }()));
  const QMatrix sel2 = selection(total, [&] {
    auto idx = range_block(0, nx);
    auto t = range_block(nx + ny, ny);
    idx.insert(idx.end(), t.begin(), t.end());
    return idx;
  }());
  const bool qual = meets_relative_interior(c, f2.graph(), sel2).has_value();

  HPolyhedron left = coderivative_at(map_sum(f1, f2), s.x, s.y, ystar);
  HPolyhedron right = minkowski_sum(coderivative_at(f1, s.x, s.y1, ystar), coderivative_at(f2, s.x, s.y2, ystar));
  if (!hpoly_contains(right, left))
    throw std::logic_error("coderivative_sum_rule_check: sum of coderivatives escapes the left side");
  const bool rule = hpoly_contains(left, right);
  return CoderivSumReport{qual, rule, std::move(left), std::move(right)};
}

CoderivChainReport coderivative_chain_rule_check(const PolyMap& f, const PolyMap& g, const QVector& x,
                                                 const QVector& y, const QVector& z, const QVector& zstar) {
  if (f.ny() != g.nx()) throw std::invalid_argument("coderivative_chain_rule_check: inner dimensions do not match");
  if (!f.graph_contains(x, y) || !g.graph_contains(y, z))
    throw std::invalid_argument("coderivative_chain_rule_check: invalid intermediate point");
  const Index nx = f.nx(), ny = f.ny(), nz = g.ny();

  // Qualifications over (x, y, z).
  const Index total = nx + ny + nz;
  const QMatrix sel_xy = selection(total, range_block(0, nx + ny));
  const QMatrix sel_yz = selection(total, range_block(nx, ny + nz));
  const HPolyhedron lift_f = affine_preimage(f.graph(), sel_xy);
  const HPolyhedron lift_g = affine_preimage(g.graph(), sel_yz);
  const bool qual_a = meets_relative_interior(lift_f, g.graph(), sel_yz).has_value();
  const bool qual_b = meets_relative_interior(lift_g, f.graph(), sel_xy).has_value();

  HPolyhedron left = coderivative_at(map_compose(f, g), x, z, zstar);

  // Right side: project the joint multiplier system
  // {(xstar, ystar) : (xstar, -ystar) in N(gph F), (ystar, -zstar) in N(gph G)}
  // onto xstar.
  const auto cone_f = normal_cone_at(f.graph(), concat(x, y));
  const auto cone_g = normal_cone_at(g.graph(), concat(y, z));
  const Index ngf = static_cast<Index>(cone_f->generators.size());
  const Index ngg = static_cast<Index>(cone_g->generators.size());
  const Index vars = nx + ny + ngf + ngg;  // (xstar, ystar, lambdaF, lambdaG)

  QMatrix eqm = zero_matrix(nx + ny + ny + nz, vars);
  QVector eqv = zero_vector(nx + ny + ny + nz);
  for (Index i = 0; i < nx; ++i) {
    eqm(i, i) = 1;
    for (Index j = 0; j < ngf; ++j) eqm(i, nx + ny + j) = -cone_f->generators[static_cast<std::size_t>(j)](i);
  }
  for (Index i = 0; i < ny; ++i) {
    eqm(nx + i, nx + i) = 1;
    for (Index j = 0; j < ngf; ++j)
      eqm(nx + i, nx + ny + j) = cone_f->generators[static_cast<std::size_t>(j)](nx + i);
  }
  for (Index i = 0; i < ny; ++i) {
    eqm(nx + ny + i, nx + i) = 1;
    for (Index j = 0; j < ngg; ++j)
      eqm(nx + ny + i, nx + ny + ngf + j) = -cone_g->generators[static_cast<std::size_t>(j)](i);
  }
  for (Index i = 0; i < nz; ++i) {
    for (Index j = 0; j < ngg; ++j)
      eqm(nx + 2 * ny + i, nx + ny + ngf + j) = cone_g->generators[static_cast<std::size_t>(j)](ny + i);
    eqv(nx + 2 * ny + i) = -zstar(i);
  }
  QMatrix a = zero_matrix(ngf + ngg, vars);
  for (Index j = 0; j < ngf + ngg; ++j) a(j, nx + ny + j) = -1;
  const HPolyhedron joint =
      HPolyhedron::make(vars, std::move(a), zero_vector(ngf + ngg), std::move(eqm), std::move(eqv));
  HPolyhedron right = project_fm(joint, nx);

  if (!hpoly_contains(right, left))
    throw std::logic_error("coderivative_chain_rule_check: composed coderivatives escape the left side");
  const bool rule = hpoly_contains(left, right);
  return CoderivChainReport{qual_a, qual_b, rule, std::move(left), std::move(right)};
}

}  // namespace polycalc
