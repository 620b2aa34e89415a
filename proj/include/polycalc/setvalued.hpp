// SPDX-License-Identifier: Apache-2.0
//
// Polyhedral set-valued mappings represented by their graphs, their
// coderivatives, sums and compositions, and certified checks of the
// coderivative sum and chain rules.

#pragma once

#include "polycalc/cones.hpp"

namespace polycalc {

/// F: R^nx => R^ny with a nonempty polyhedral graph in R^(nx+ny),
/// first block x, second block y.
class PolyMap {
 public:
  static PolyMap make(Index nx, Index ny, HPolyhedron graph);

  /// F(x) = {A x}.
  static PolyMap linear(const QMatrix& a);

  /// The identity on R^n.
  static PolyMap identity(Index n);

  Index nx() const { return nx_; }
  Index ny() const { return ny_; }
  const HPolyhedron& graph() const { return graph_; }

  bool graph_contains(const QVector& x, const QVector& y) const;

 private:
  PolyMap(Index nx, Index ny, HPolyhedron graph) : nx_(nx), ny_(ny), graph_(std::move(graph)) {}
  Index nx_, ny_;
  HPolyhedron graph_;
};

/// D*F(x, y)(ystar) = {xstar : (xstar, -ystar) in N((x, y); gph F)} as an
/// explicit H-polyhedron; may be empty. Requires (x, y) on the graph.
HPolyhedron coderivative_at(const PolyMap& f, const QVector& x, const QVector& y, const QVector& ystar);

/// (F1 + F2)(x) = F1(x) + F2(x), graph by projection of the lifted system.
PolyMap map_sum(const PolyMap& f1, const PolyMap& f2);

/// (G o F)(x) = union of G(y) over y in F(x), graph by projection.
PolyMap map_compose(const PolyMap& f, const PolyMap& g);

struct SplitPoint {
  QVector x;
  QVector y;
  QVector y1;
  QVector y2;
};

/// One feasible split y = y1 + y2 with (x, yi) in gph Fi; the objective
/// weights steer which split the LP picks so tests can sample several.
std::optional<SplitPoint> find_split(const PolyMap& f1, const PolyMap& f2, const QVector& x, const QVector& y,
                                     const QVector& objective_weights);

struct CoderivSumReport {
  bool qualification_holds = false;
  bool rule_holds = false;
  HPolyhedron left;
  HPolyhedron right;
};

/// Checks D*(F1+F2)(x,y)(ystar) = D*F1(x,y1)(ystar) + D*F2(x,y2)(ystar)
/// at the given split. The inclusion right into left is verified
/// unconditionally and a violation throws std::logic_error.
CoderivSumReport coderivative_sum_rule_check(const PolyMap& f1, const PolyMap& f2, const SplitPoint& s,
                                             const QVector& ystar);

struct CoderivChainReport {
  bool qualification_holds_graph_g = false;  // (x,y) in gph F, (y,z) in ri(gph G)
  bool qualification_holds_graph_f = false;  // (x,y) in ri(gph F), (y,z) in gph G
  bool rule_holds = false;
  HPolyhedron left;
  HPolyhedron right;
};

/// Checks D*(G o F)(x,z)(zstar) = D*F(x,y) o D*G(y,z)(zstar) at an
/// intermediate point y. The right side is computed as one projection of
/// the joint multiplier system, capturing the union over all ystar.
CoderivChainReport coderivative_chain_rule_check(const PolyMap& f, const PolyMap& g, const QVector& x,
                                                 const QVector& y, const QVector& z, const QVector& zstar);

}  // namespace polycalc
