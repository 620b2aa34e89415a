// SPDX-License-Identifier: Apache-2.0

#include "polycalc/polyhedron.hpp"

#include "polycalc/errors.hpp"
#include "polycalc/linalg.hpp"

#include <algorithm>

namespace polycalc {

namespace {

bool row_is_zero(const QMatrix& m, Index r) {
  for (Index j = 0; j < m.cols(); ++j)
    if (m(r, j) != 0) return false;
  return true;
}

}  // namespace

HPolyhedron::HPolyhedron(Index n)
    : n_(n), A_(zero_matrix(0, n)), b_(zero_vector(0)), E_(zero_matrix(0, n)), e_(zero_vector(0)) {
  if (n <= 0) throw std::invalid_argument("HPolyhedron: dimension must be positive");
}

HPolyhedron HPolyhedron::make(Index n, QMatrix A, QVector b, QMatrix E, QVector e) {
  if (n <= 0) throw std::invalid_argument("HPolyhedron: dimension must be positive");
  if (A.rows() != b.size() || E.rows() != e.size())
    throw std::invalid_argument("HPolyhedron: row counts do not match right-hand sides");
  if ((A.rows() > 0 && A.cols() != n) || (E.rows() > 0 && E.cols() != n))
    throw std::invalid_argument("HPolyhedron: column counts do not match dimension");
  if (A.rows() == 0) A = zero_matrix(0, n);
  if (E.rows() == 0) E = zero_matrix(0, n);

  // Drop vacuous zero rows; keep contradictory ones (they encode emptiness).
  std::vector<Index> keep_a, keep_e;
  for (Index i = 0; i < A.rows(); ++i)
    if (!row_is_zero(A, i) || b(i) < 0) keep_a.push_back(i);
  for (Index i = 0; i < E.rows(); ++i)
    if (!row_is_zero(E, i) || e(i) != 0) keep_e.push_back(i);

  QMatrix A2(static_cast<Index>(keep_a.size()), n);
  QVector b2(static_cast<Index>(keep_a.size()));
  for (std::size_t k = 0; k < keep_a.size(); ++k) {
    A2.row(static_cast<Index>(k)) = A.row(keep_a[k]);
    b2(static_cast<Index>(k)) = b(keep_a[k]);
  }
  QMatrix E2(static_cast<Index>(keep_e.size()), n);
  QVector e2(static_cast<Index>(keep_e.size()));
  for (std::size_t k = 0; k < keep_e.size(); ++k) {
    E2.row(static_cast<Index>(k)) = E.row(keep_e[k]);
    e2(static_cast<Index>(k)) = e(keep_e[k]);
  }
  return HPolyhedron(n, std::move(A2), std::move(b2), std::move(E2), std::move(e2));
}

HPolyhedron HPolyhedron::make(Index n, QMatrix A, QVector b) {
  return make(n, std::move(A), std::move(b), zero_matrix(0, n), zero_vector(0));
}

bool HPolyhedron::contains_point(const QVector& x) const {
  if (x.size() != n_) throw std::invalid_argument("contains_point: dimension mismatch");
  for (Index i = 0; i < A_.rows(); ++i) {
    Rational lhs = 0;
    for (Index j = 0; j < n_; ++j) lhs += A_(i, j) * x(j);
    if (lhs > b_(i)) return false;
  }
  for (Index i = 0; i < E_.rows(); ++i) {
    Rational lhs = 0;
    for (Index j = 0; j < n_; ++j) lhs += E_(i, j) * x(j);
    if (lhs != e_(i)) return false;
  }
  return true;
}

std::vector<Index> HPolyhedron::active_rows(const QVector& x) const {
  if (!contains_point(x)) throw std::invalid_argument("active_rows: point is not in the set");
  std::vector<Index> act;
  for (Index i = 0; i < A_.rows(); ++i) {
    Rational lhs = 0;
    for (Index j = 0; j < n_; ++j) lhs += A_(i, j) * x(j);
    if (lhs == b_(i)) act.push_back(i);
  }
  return act;
}

HPolyhedron empty_polyhedron(Index n) {
  QMatrix a = zero_matrix(1, n);
  QVector b(1);
  b(0) = -1;
  return HPolyhedron::make(n, std::move(a), std::move(b));
}

LPOutcome maximize_over(const HPolyhedron& p, const QVector& w) {
  if (w.size() != p.dim()) throw std::invalid_argument("maximize_over: dimension mismatch");
  return solve_lp(LPProblem::minimize(-w, p.A(), p.b(), p.E(), p.e()));
}

EmptinessReport is_empty(const HPolyhedron& p) {
  if (p.num_ineq() == 0 && p.num_eq() == 0) return {};
  const LPOutcome out = solve_lp(LPProblem::minimize(zero_vector(p.dim()), p.A(), p.b(), p.E(), p.e()));
  if (const auto* inf = as_infeasible(out)) return {true, FarkasCertificate{inf->farkas_ineq, inf->farkas_eq}};
  return {};
}

std::optional<QVector> find_point(const HPolyhedron& p) {
  const LPOutcome out = solve_lp(LPProblem::minimize(zero_vector(p.dim()), p.A(), p.b(), p.E(), p.e()));
  if (const auto* opt = as_optimal(out)) return opt->x;
  return std::nullopt;
}

RelativeInteriorReport implicit_equalities_report(const HPolyhedron& p) {
  if (is_empty(p).empty) throw InfeasibleError("implicit_equalities_report: empty polyhedron");
  const Index n = p.dim(), m = p.num_ineq();
  RelativeInteriorReport rep;
  std::vector<bool> implicit(static_cast<std::size_t>(m), false);

  for (Index i = 0; i < m; ++i) {
    // Maximize the slack b_i - <a_i, x> over p.
    const LPOutcome out = maximize_over(p, QVector(-p.A().row(i).transpose()));
    if (const auto* opt = as_optimal(out)) {
      const Rational max_slack = p.b()(i) - opt->value;  // value = min <a_i, x>
      if (max_slack == 0) {
        implicit[static_cast<std::size_t>(i)] = true;
        rep.implicit_equality_rows.push_back(i);
      } else {
        rep.strict_witnesses.emplace_back(i, opt->x);
      }
    } else if (const auto* ub = as_unbounded(out)) {
      QVector w = ub->feasible_point;
      Rational slack_at = p.b()(i);
      for (Index j = 0; j < n; ++j) slack_at -= p.A()(i, j) * w(j);
      if (slack_at == 0) w += ub->ray;
      rep.strict_witnesses.emplace_back(i, w);
    } else {
      throw std::logic_error("implicit_equalities_report: slack LP infeasible on nonempty set");
    }
  }

  // affine_dim = n - rank of the forced-equality system.
  const Index rows = p.num_eq() + static_cast<Index>(rep.implicit_equality_rows.size());
  QMatrix forced(rows, n);
  Index r = 0;
  for (Index i = 0; i < p.num_eq(); ++i) forced.row(r++) = p.E().row(i);
  for (Index i : rep.implicit_equality_rows) forced.row(r++) = p.A().row(i);
  rep.affine_dim = n - (rows == 0 ? 0 : rref_rank(forced).rank);

  // Relative interior point: maximize a common slack t over non-implicit
  // rows with implicit rows pinned to equality and t capped at 1.
  const Index mni = m - static_cast<Index>(rep.implicit_equality_rows.size());
  QMatrix A2(mni + 1, n + 1);
  QVector b2(mni + 1);
  Index rr = 0;
  for (Index i = 0; i < m; ++i) {
    if (implicit[static_cast<std::size_t>(i)]) continue;
    for (Index j = 0; j < n; ++j) A2(rr, j) = p.A()(i, j);
    A2(rr, n) = 1;
    b2(rr) = p.b()(i);
    ++rr;
  }
  for (Index j = 0; j < n; ++j) A2(rr, j) = 0;
  A2(rr, n) = 1;
  b2(rr) = 1;

  const Index keq = p.num_eq() + static_cast<Index>(rep.implicit_equality_rows.size());
  QMatrix E2(keq, n + 1);
  QVector e2(keq);
  Index er = 0;
  for (Index i = 0; i < p.num_eq(); ++i) {
    for (Index j = 0; j < n; ++j) E2(er, j) = p.E()(i, j);
    E2(er, n) = 0;
    e2(er) = p.e()(i);
    ++er;
  }
  for (Index i : rep.implicit_equality_rows) {
    for (Index j = 0; j < n; ++j) E2(er, j) = p.A()(i, j);
    E2(er, n) = 0;
    e2(er) = p.b()(i);
    ++er;
  }

  QVector obj = zero_vector(n + 1);
  obj(n) = -1;  // maximize t
  const LPOutcome out = solve_lp(LPProblem::minimize(obj, A2, b2, E2, e2));
  const auto* opt = as_optimal(out);
  if (opt == nullptr || -opt->value <= 0)
    throw std::logic_error("implicit_equalities_report: no strict-slack point on a nonempty polyhedron");
  rep.ri_point = opt->x.head(n);
  return rep;
}

QVector relative_interior_point(const HPolyhedron& p) { return implicit_equalities_report(p).ri_point; }

bool contains_point_ri(const HPolyhedron& p, const QVector& x) {
  if (x.size() != p.dim()) throw std::invalid_argument("contains_point_ri: dimension mismatch");
  if (!p.contains_point(x)) return false;
  const RelativeInteriorReport rep = implicit_equalities_report(p);
  std::vector<bool> implicit(static_cast<std::size_t>(p.num_ineq()), false);
  for (Index i : rep.implicit_equality_rows) implicit[static_cast<std::size_t>(i)] = true;
  for (Index i = 0; i < p.num_ineq(); ++i) {
    Rational lhs = 0;
    for (Index j = 0; j < p.dim(); ++j) lhs += p.A()(i, j) * x(j);
    if (implicit[static_cast<std::size_t>(i)]) {
      if (lhs != p.b()(i)) return false;
    } else if (lhs >= p.b()(i)) {
      return false;
    }
  }
  return true;
}

namespace {

struct WorkingSystem {
  Index n;
  std::vector<QVector> ineq;  // length-n coefficient rows
  std::vector<Rational> rhs_ineq;
  std::vector<QVector> eq;
  std::vector<Rational> rhs_eq;

  static WorkingSystem from(const HPolyhedron& p) {
    WorkingSystem w;
    w.n = p.dim();
    for (Index i = 0; i < p.num_ineq(); ++i) {
      w.ineq.push_back(p.A().row(i).transpose());
      w.rhs_ineq.push_back(p.b()(i));
    }
    for (Index i = 0; i < p.num_eq(); ++i) {
      w.eq.push_back(p.E().row(i).transpose());
      w.rhs_eq.push_back(p.e()(i));
    }
    return w;
  }

  HPolyhedron to_polyhedron(Index dims) const {
    QMatrix a(static_cast<Index>(ineq.size()), dims);
    QVector b(static_cast<Index>(ineq.size()));
    for (std::size_t i = 0; i < ineq.size(); ++i) {
      for (Index j = 0; j < dims; ++j) a(static_cast<Index>(i), j) = ineq[i](j);
      b(static_cast<Index>(i)) = rhs_ineq[i];
    }
    QMatrix eqm(static_cast<Index>(eq.size()), dims);
    QVector eqv(static_cast<Index>(eq.size()));
    for (std::size_t i = 0; i < eq.size(); ++i) {
      for (Index j = 0; j < dims; ++j) eqm(static_cast<Index>(i), j) = eq[i](j);
      eqv(static_cast<Index>(i)) = rhs_eq[i];
    }
    return HPolyhedron::make(dims, std::move(a), std::move(b), std::move(eqm), std::move(eqv));
  }
};

// One Fourier-Motzkin step: removes variable col from the system.
void eliminate_variable(WorkingSystem& w, Index col) {
  // Prefer substitution through an equality row containing the variable.
  for (std::size_t r = 0; r < w.eq.size(); ++r) {
    if (w.eq[r](col) == 0) continue;
    const QVector pivot_row = w.eq[r];
    const Rational pivot_rhs = w.rhs_eq[r];
    const Rational piv = pivot_row(col);
    auto substitute = [&](QVector& row, Rational& rhs) {
      if (row(col) == 0) return;
      const Rational f = row(col) / piv;
      row -= f * pivot_row;
      rhs -= f * pivot_rhs;
    };
    w.eq.erase(w.eq.begin() + static_cast<std::ptrdiff_t>(r));
    w.rhs_eq.erase(w.rhs_eq.begin() + static_cast<std::ptrdiff_t>(r));
    for (std::size_t i = 0; i < w.ineq.size(); ++i) substitute(w.ineq[i], w.rhs_ineq[i]);
    for (std::size_t i = 0; i < w.eq.size(); ++i) substitute(w.eq[i], w.rhs_eq[i]);
    return;
  }

  std::vector<std::size_t> pos, neg;
  std::vector<QVector> kept;
  std::vector<Rational> kept_rhs;
  for (std::size_t i = 0; i < w.ineq.size(); ++i) {
    if (w.ineq[i](col) > 0)
      pos.push_back(i);
    else if (w.ineq[i](col) < 0)
      neg.push_back(i);
    else {
      kept.push_back(w.ineq[i]);
      kept_rhs.push_back(w.rhs_ineq[i]);
    }
  }
  for (std::size_t p : pos) {
    for (std::size_t q : neg) {
      const Rational cp = w.ineq[p](col);
      const Rational cq = -w.ineq[q](col);
      QVector row = w.ineq[p] / cp + w.ineq[q] / cq;
      row(col) = 0;  // exact by construction; pin against any repr drift
      kept.push_back(std::move(row));
      kept_rhs.push_back(w.rhs_ineq[p] / cp + w.rhs_ineq[q] / cq);
    }
  }
  w.ineq = std::move(kept);
  w.rhs_ineq = std::move(kept_rhs);
}

}  // namespace

HPolyhedron project_fm(const HPolyhedron& p, Index keep) {
  if (keep < 1 || keep > p.dim()) throw std::invalid_argument("project_fm: keep out of range");
  if (keep == p.dim()) return p;

  WorkingSystem w = WorkingSystem::from(p);
  std::vector<Index> to_drop;
  for (Index j = keep; j < p.dim(); ++j) to_drop.push_back(j);

  while (!to_drop.empty()) {
    // Cheapest variable first: fewest pos*neg products among inequalities.
    std::size_t best = 0;
    long best_cost = -1;
    for (std::size_t t = 0; t < to_drop.size(); ++t) {
      const Index col = to_drop[t];
      bool in_eq = false;
      for (const auto& row : w.eq)
        if (row(col) != 0) {
          in_eq = true;
          break;
        }
      long cost;
      if (in_eq) {
        cost = 0;
      } else {
        long np = 0, nn = 0;
        for (const auto& row : w.ineq) {
          if (row(col) > 0) ++np;
          else if (row(col) < 0) ++nn;
        }
        cost = np * nn + 1;
      }
      if (best_cost < 0 || cost < best_cost) {
        best = t;
        best_cost = cost;
      }
    }
    const Index col = to_drop[best];
    to_drop.erase(to_drop.begin() + static_cast<std::ptrdiff_t>(best));
    eliminate_variable(w, col);

    // Prune after every round; FM blows up otherwise.
    HPolyhedron current = w.to_polyhedron(p.dim());
    current = remove_redundant(current);
    if (is_empty(current).empty) return empty_polyhedron(keep);
    w = WorkingSystem::from(current);
  }
  return w.to_polyhedron(keep);
}

HPolyhedron remove_redundant(const HPolyhedron& p) {
  if (is_empty(p).empty) return empty_polyhedron(p.dim());

  std::vector<QVector> rows;
  std::vector<Rational> rhs;
  for (Index i = 0; i < p.num_ineq(); ++i) {
    rows.push_back(p.A().row(i).transpose());
    rhs.push_back(p.b()(i));
  }

  for (std::size_t i = 0; i < rows.size();) {
    // Test row i against all the others currently kept.
    QMatrix a(static_cast<Index>(rows.size() - 1), p.dim());
    QVector b(static_cast<Index>(rows.size() - 1));
    Index r = 0;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      for (Index cidx = 0; cidx < p.dim(); ++cidx) a(r, cidx) = rows[j](cidx);
      b(r) = rhs[j];
      ++r;
    }
    const LPOutcome out =
        solve_lp(LPProblem::minimize(-rows[i], a, b, p.E(), p.e()));
    bool redundant = false;
    if (const auto* opt = as_optimal(out)) redundant = (-opt->value <= rhs[i]);
    if (redundant) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
      rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  QMatrix a(static_cast<Index>(rows.size()), p.dim());
  QVector b(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Index j = 0; j < p.dim(); ++j) a(static_cast<Index>(i), j) = rows[i](j);
    b(static_cast<Index>(i)) = rhs[i];
  }
  return HPolyhedron::make(p.dim(), std::move(a), std::move(b), p.E(), p.e());
}

HPolyhedron minkowski_sum(const HPolyhedron& p, const HPolyhedron& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  const Index n = p.dim();
  // Variables (s, v) with s - v in p and v in q; the sum lives in s.
  const Index mi = p.num_ineq() + q.num_ineq();
  const Index me = p.num_eq() + q.num_eq();
  QMatrix a = zero_matrix(mi, 2 * n);
  QVector b(mi);
  Index r = 0;
  for (Index i = 0; i < p.num_ineq(); ++i, ++r) {
    for (Index j = 0; j < n; ++j) {
      a(r, j) = p.A()(i, j);
      a(r, n + j) = -p.A()(i, j);
    }
    b(r) = p.b()(i);
  }
  for (Index i = 0; i < q.num_ineq(); ++i, ++r) {
    for (Index j = 0; j < n; ++j) a(r, n + j) = q.A()(i, j);
    b(r) = q.b()(i);
  }
  QMatrix eqm = zero_matrix(me, 2 * n);
  QVector eqv(me);
  r = 0;
  for (Index i = 0; i < p.num_eq(); ++i, ++r) {
    for (Index j = 0; j < n; ++j) {
      eqm(r, j) = p.E()(i, j);
      eqm(r, n + j) = -p.E()(i, j);
    }
    eqv(r) = p.e()(i);
  }
  for (Index i = 0; i < q.num_eq(); ++i, ++r) {
    for (Index j = 0; j < n; ++j) eqm(r, n + j) = q.E()(i, j);
    eqv(r) = q.e()(i);
  }
  return project_fm(HPolyhedron::make(2 * n, std::move(a), std::move(b), std::move(eqm), std::move(eqv)), n);
}

HPolyhedron affine_image(const HPolyhedron& p, const QMatrix& m, const QVector& shift) {
  if (m.cols() != p.dim()) throw std::invalid_argument("affine_image: matrix columns must match dim(p)");
  if (m.rows() != shift.size()) throw std::invalid_argument("affine_image: shift length must match matrix rows");
  const Index rdim = m.rows(), n = p.dim();
  // Variables (y, x): y - M x = shift, x in p; project onto y.
  QMatrix eqm = zero_matrix(rdim + p.num_eq(), rdim + n);
  QVector eqv(rdim + p.num_eq());
  for (Index i = 0; i < rdim; ++i) {
    eqm(i, i) = 1;
    for (Index j = 0; j < n; ++j) eqm(i, rdim + j) = -m(i, j);
    eqv(i) = shift(i);
  }
  for (Index i = 0; i < p.num_eq(); ++i) {
    for (Index j = 0; j < n; ++j) eqm(rdim + i, rdim + j) = p.E()(i, j);
    eqv(rdim + i) = p.e()(i);
  }
  QMatrix a = zero_matrix(p.num_ineq(), rdim + n);
  QVector b(p.num_ineq());
  for (Index i = 0; i < p.num_ineq(); ++i) {
    for (Index j = 0; j < n; ++j) a(i, rdim + j) = p.A()(i, j);
    b(i) = p.b()(i);
  }
  return project_fm(HPolyhedron::make(rdim + n, std::move(a), std::move(b), std::move(eqm), std::move(eqv)), rdim);
}

HPolyhedron affine_preimage(const HPolyhedron& p, const QMatrix& m) {
  if (m.rows() != p.dim()) throw std::invalid_argument("affine_preimage: matrix rows must match dim(p)");
  return HPolyhedron::make(m.cols(), p.A() * m, p.b(), p.E() * m, p.e());
}

HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("intersect: dimension mismatch");
  QMatrix a(p.num_ineq() + q.num_ineq(), p.dim());
  QVector b(a.rows());
  a.topRows(p.num_ineq()) = p.A();
  a.bottomRows(q.num_ineq()) = q.A();
  b.head(p.num_ineq()) = p.b();
  b.tail(q.num_ineq()) = q.b();
  QMatrix eqm(p.num_eq() + q.num_eq(), p.dim());
  QVector eqv(eqm.rows());
  eqm.topRows(p.num_eq()) = p.E();
  eqm.bottomRows(q.num_eq()) = q.E();
  eqv.head(p.num_eq()) = p.e();
  eqv.tail(q.num_eq()) = q.e();
  return HPolyhedron::make(p.dim(), std::move(a), std::move(b), std::move(eqm), std::move(eqv));
}

HPolyhedron embed(const HPolyhedron& p, Index total, Index offset) {
  if (offset < 0 || offset + p.dim() > total) throw std::invalid_argument("embed: block out of range");
  QMatrix a = zero_matrix(p.num_ineq(), total);
  QMatrix eqm = zero_matrix(p.num_eq(), total);
  a.middleCols(offset, p.dim()) = p.A();
  eqm.middleCols(offset, p.dim()) = p.E();
  return HPolyhedron::make(total, std::move(a), p.b(), std::move(eqm), p.e());
}

bool hpoly_contains(const HPolyhedron& inner, const HPolyhedron& outer) {
  if (inner.dim() != outer.dim()) throw std::invalid_argument("hpoly_contains: dimension mismatch");
  if (is_empty(inner).empty) return true;
  auto bounded_by = [&inner](const QVector& w, const Rational& bound) {
    const LPOutcome out = maximize_over(inner, w);
    if (const auto* opt = as_optimal(out)) return -opt->value <= bound;
    return false;  // unbounded above
  };
  for (Index i = 0; i < outer.num_ineq(); ++i)
    if (!bounded_by(outer.A().row(i).transpose(), outer.b()(i))) return false;
  for (Index i = 0; i < outer.num_eq(); ++i) {
    const QVector row = outer.E().row(i).transpose();
    if (!bounded_by(row, outer.e()(i))) return false;
    if (!bounded_by(-row, -outer.e()(i))) return false;
  }
  return true;
}

bool hpoly_equal(const HPolyhedron& p, const HPolyhedron& q) {
  return hpoly_contains(p, q) && hpoly_contains(q, p);
}

std::optional<QVector> meets_relative_interior(const HPolyhedron& c, const HPolyhedron& d, const QMatrix& m) {
  if (m.rows() != d.dim() || m.cols() != c.dim())
    throw std::invalid_argument("meets_relative_interior: map shape mismatch");
  if (is_empty(d).empty || is_empty(c).empty) return std::nullopt;
  const RelativeInteriorReport rep = implicit_equalities_report(d);
  std::vector<bool> implicit(static_cast<std::size_t>(d.num_ineq()), false);
  for (Index i : rep.implicit_equality_rows) implicit[static_cast<std::size_t>(i)] = true;

  const Index nz = c.dim();
  const QMatrix ad = d.A() * m;  // rows of d pulled back to z-space
  const QMatrix ed = d.E() * m;

  const Index mni = d.num_ineq() - static_cast<Index>(rep.implicit_equality_rows.size());
  QMatrix a = zero_matrix(c.num_ineq() + mni + 1, nz + 1);
  QVector b(a.rows());
  Index r = 0;
  for (Index i = 0; i < c.num_ineq(); ++i, ++r) {
    for (Index j = 0; j < nz; ++j) a(r, j) = c.A()(i, j);
    b(r) = c.b()(i);
  }
  for (Index i = 0; i < d.num_ineq(); ++i) {
    if (implicit[static_cast<std::size_t>(i)]) continue;
    for (Index j = 0; j < nz; ++j) a(r, j) = ad(i, j);
    a(r, nz) = 1;
    b(r) = d.b()(i);
    ++r;
  }
  a(r, nz) = 1;
  b(r) = 1;

  QMatrix eqm = zero_matrix(c.num_eq() + d.num_eq() + static_cast<Index>(rep.implicit_equality_rows.size()), nz + 1);
  QVector eqv(eqm.rows());
  r = 0;
  for (Index i = 0; i < c.num_eq(); ++i, ++r) {
    for (Index j = 0; j < nz; ++j) eqm(r, j) = c.E()(i, j);
    eqv(r) = c.e()(i);
  }
  for (Index i = 0; i < d.num_eq(); ++i, ++r) {
    for (Index j = 0; j < nz; ++j) eqm(r, j) = ed(i, j);
    eqv(r) = d.e()(i);
  }
  for (Index i : rep.implicit_equality_rows) {
    for (Index j = 0; j < nz; ++j) eqm(r, j) = ad(i, j);
    eqv(r) = d.b()(i);
    ++r;
  }

  QVector obj = zero_vector(nz + 1);
  obj(nz) = -1;
  const LPOutcome out = solve_lp(LPProblem::minimize(obj, a, b, eqm, eqv));
  const auto* opt = as_optimal(out);
  if (opt == nullptr) return std::nullopt;
  if (-opt->value <= 0) return std::nullopt;
  return QVector(opt->x.head(nz));
}

}  // namespace polycalc
