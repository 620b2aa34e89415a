// SPDX-License-Identifier: Apache-2.0

#include "polycalc/lp.hpp"

#include "polycalc/linalg.hpp"

#include <vector>

namespace polycalc {

void LPProblem::validate() const {
  const Index n = c.size();
  if (A.rows() != b.size()) throw std::invalid_argument("LPProblem: A rows do not match b");
  if (E.rows() != e.size()) throw std::invalid_argument("LPProblem: E rows do not match e");
  if (A.rows() > 0 && A.cols() != n) throw std::invalid_argument("LPProblem: A column count does not match c");
  if (E.rows() > 0 && E.cols() != n) throw std::invalid_argument("LPProblem: E column count does not match c");
}

LPProblem LPProblem::minimize(QVector c, QMatrix A, QVector b) {
  const Index n = c.size();
  return minimize(std::move(c), std::move(A), std::move(b), zero_matrix(0, n), zero_vector(0));
}

LPProblem LPProblem::minimize(QVector c, QMatrix A, QVector b, QMatrix E, QVector e) {
  LPProblem p{std::move(c), std::move(A), std::move(b), std::move(E), std::move(e)};
  if (p.A.cols() == 0 && p.A.rows() > 0) throw std::invalid_argument("LPProblem: zero-column A with rows");
  p.validate();
  return p;
}

namespace {

enum class ColClass { Free, Slack, Artificial };

// Dense tableau simplex with Bland's rule. Free variables enter on any
// nonzero reduced cost and never leave the basis; restricted variables
// follow the textbook rules. Rows are kept sign-normalized so that every
// restricted basic variable has a nonnegative value.
class Simplex {
 public:
  explicit Simplex(const LPProblem& p) : p_(p), n_(p.num_vars()), m_(p.num_ineq()), k_(p.num_eq()) { build(); }

  LPOutcome solve() {
    if (m_ + k_ == 0) return no_constraint_outcome();

    run_phase(cost1_);
    const Rational infeas = phase_objective(cost1_raw());
    if (infeas > 0) return make_infeasible();

    pivot_out_artificials();
    for (Index j = 0; j < ncols_; ++j)
      if (cls_[j] == ColClass::Artificial) blocked_[j] = true;

    const Index ub_col = run_phase(cost2_);
    if (ub_col >= 0) return make_unbounded(ub_col);
    return make_optimal();
  }

 private:
  void build() {
    const Index rows = m_ + k_;
    ncols_ = n_ + m_;  // artificials appended below
    std::vector<Index> art_of_row(rows, -1);
    for (Index r = 0; r < rows; ++r) {
      const bool is_eq = r >= m_;
      const Rational rhs_orig = is_eq ? p_.e(r - m_) : p_.b(r);
      sigma_.push_back(rhs_orig < 0 ? Rational(-1) : Rational(1));
      const bool needs_art = is_eq || rhs_orig < 0;
      if (needs_art) {
        art_of_row[r] = ncols_;
        ++ncols_;
      }
    }

    M0_ = zero_matrix(rows, ncols_);
    q0_ = zero_vector(rows);
    for (Index r = 0; r < rows; ++r) {
      const bool is_eq = r >= m_;
      for (Index j = 0; j < n_; ++j) M0_(r, j) = sigma_[r] * (is_eq ? p_.E(r - m_, j) : p_.A(r, j));
      if (!is_eq) M0_(r, n_ + r) = sigma_[r];
      if (art_of_row[r] >= 0) M0_(r, art_of_row[r]) = 1;
      q0_(r) = sigma_[r] * (is_eq ? p_.e(r - m_) : p_.b(r));
    }

    cls_.assign(ncols_, ColClass::Free);
    for (Index j = n_; j < n_ + m_; ++j) cls_[j] = ColClass::Slack;
    for (Index j = n_ + m_; j < ncols_; ++j) cls_[j] = ColClass::Artificial;
    blocked_.assign(ncols_, false);

    rows_.reserve(rows);
    rhs_.reserve(rows);
    for (Index r = 0; r < rows; ++r) {
      rows_.push_back(M0_.row(r).transpose());
      rhs_.push_back(q0_(r));
      basis_.push_back(art_of_row[r] >= 0 ? art_of_row[r] : n_ + r);
      orig_row_.push_back(r);
    }
    is_basic_.assign(ncols_, false);
    for (Index v : basis_) is_basic_[v] = true;

    cost1_ = zero_vector(ncols_);
    for (Index j = 0; j < ncols_; ++j)
      if (cls_[j] == ColClass::Artificial) cost1_(j) = 1;
    cost2_ = zero_vector(ncols_);
    for (Index j = 0; j < n_; ++j) cost2_(j) = p_.c(j);
  }

  // Subtracts basic rows so that reduced costs of basic columns vanish.
  void reduce_costs(QVector& cost) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = cost(basis_[r]);
      if (f != 0) cost -= f * rows_[r];
    }
  }

  Rational phase_objective(const QVector& original_cost) const {
    Rational z = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) z += original_cost_of(original_cost, basis_[r]) * rhs_[r];
    return z;
  }
  static Rational original_cost_of(const QVector& cost_template, Index var) { return cost_template(var); }

  void pivot(std::size_t row, Index col, QVector& cost) {
    const Rational piv = rows_[row](col);
    rows_[row] /= piv;
    rhs_[row] /= piv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row) continue;
      const Rational f = rows_[i](col);
      if (f == 0) continue;
      rows_[i] -= f * rows_[row];
      rhs_[i] -= f * rhs_[row];
    }
    const Rational fc = cost(col);
    if (fc != 0) cost -= fc * rows_[row];
    is_basic_[basis_[row]] = false;
    basis_[row] = col;
    is_basic_[col] = true;
  }

  // Runs Bland pivoting until optimal (-1) or an unbounded entering column.
  // `cost` enters as the original objective and is reduced in place.
  Index run_phase(QVector& cost) {
    reduce_costs(cost);
    for (;;) {
      Index enter = -1;
      int dir = 1;
      for (Index j = 0; j < ncols_; ++j) {
        if (is_basic_[j] || blocked_[j]) continue;
        const Rational& d = cost(j);
        if (cls_[j] == ColClass::Free) {
          if (d != 0) {
            enter = j;
            dir = d < 0 ? 1 : -1;
            break;
          }
        } else if (d < 0) {
          enter = j;
          dir = 1;
          break;
        }
      }
      if (enter < 0) return -1;

      std::size_t leave = rows_.size();
      Rational best_ratio = 0;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (cls_[basis_[i]] == ColClass::Free) continue;
        const Rational w = dir * rows_[i](enter);
        if (w <= 0) continue;
        const Rational ratio = rhs_[i] / w;
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) {
        if (&cost == &cost1_) throw std::logic_error("phase-1 objective cannot be unbounded");
        unbounded_dir_ = dir;
        return enter;
      }
      pivot(leave, enter, cost);
    }
  }

  // After a zero-value phase 1, removes artificials from the basis; rows
  // that cannot be pivoted are redundant and get dropped.
  void pivot_out_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (cls_[basis_[r]] != ColClass::Artificial) {
        ++r;
        continue;
      }
      Index col = -1;
      for (Index j = 0; j < ncols_ && col < 0; ++j)
        if (cls_[j] != ColClass::Artificial && !is_basic_[j] && rows_[r](j) != 0) col = j;
      if (col >= 0) {
        pivot(r, col, cost1_);
        ++r;
      } else {
        is_basic_[basis_[r]] = false;
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        orig_row_.erase(orig_row_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  QVector current_x() const {
    QVector x = zero_vector(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < n_) x(basis_[r]) = rhs_[r];
    return x;
  }

  // Solves B'y = c_B for the prices of the active rows; dropped rows price 0.
  QVector row_prices(const QVector& original_cost) const {
    const Index nr = static_cast<Index>(rows_.size());
    QMatrix bt(nr, nr);
    QVector cb(nr);
    for (Index i = 0; i < nr; ++i) {
      cb(i) = original_cost(basis_[static_cast<std::size_t>(i)]);
      for (Index r = 0; r < nr; ++r)
        bt(i, r) = M0_(orig_row_[static_cast<std::size_t>(r)], basis_[static_cast<std::size_t>(i)]);
    }
    const auto sol = solve_linear_system(bt, cb);
    if (!sol) throw std::logic_error("simplex basis matrix is singular");
    QVector y = zero_vector(m_ + k_);
    for (Index r = 0; r < nr; ++r) y(orig_row_[static_cast<std::size_t>(r)]) = sol->particular(r);
    return y;
  }

  // Maps internal prices back to the documented sign convention
  // A'lambda + E'nu = -c.
  void split_duals(const QVector& y, QVector& lambda, QVector& nu) const {
    lambda = zero_vector(m_);
    nu = zero_vector(k_);
    for (Index i = 0; i < m_; ++i) lambda(i) = -sigma_[i] * y(i);
    for (Index j = 0; j < k_; ++j) nu(j) = -sigma_[m_ + j] * y(m_ + j);
  }

  LPOutcome make_optimal() const {
    LPOptimal res;
    res.x = current_x();
    const QVector y = row_prices(cost2_raw());
    split_duals(y, res.ineq_duals, res.eq_duals);
    res.value = 0;
    for (Index j = 0; j < n_; ++j) res.value += p_.c(j) * res.x(j);
    return res;
  }

  LPOutcome make_unbounded(Index enter) const {
    LPUnbounded res;
    res.feasible_point = current_x();
    QVector ray = zero_vector(n_);
    if (enter < n_) ray(enter) = unbounded_dir_;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < n_) ray(basis_[r]) = -unbounded_dir_ * rows_[r](enter);
    res.ray = std::move(ray);
    return res;
  }

  LPOutcome make_infeasible() const {
    LPInfeasible res;
    const QVector y = row_prices(cost1_raw());
    split_duals(y, res.farkas_ineq, res.farkas_eq);
    return res;
  }

  LPOutcome no_constraint_outcome() const {
    if (is_zero_vector(p_.c)) return LPOptimal{zero_vector(n_), zero_vector(0), zero_vector(0), 0};
    return LPUnbounded{zero_vector(n_), QVector(-p_.c)};
  }

  QVector cost1_raw() const {
    QVector c = zero_vector(ncols_);
    for (Index j = 0; j < ncols_; ++j)
      if (cls_[j] == ColClass::Artificial) c(j) = 1;
    return c;
  }
  QVector cost2_raw() const {
    QVector c = zero_vector(ncols_);
    for (Index j = 0; j < n_; ++j) c(j) = p_.c(j);
    return c;
  }

  const LPProblem& p_;
  Index n_, m_, k_, ncols_ = 0;
  QMatrix M0_;
  QVector q0_;
  std::vector<Rational> sigma_;
  std::vector<ColClass> cls_;
  std::vector<bool> blocked_;
  std::vector<QVector> rows_;
  std::vector<Rational> rhs_;
  std::vector<Index> basis_;
  std::vector<Index> orig_row_;
  std::vector<bool> is_basic_;
  QVector cost1_, cost2_;
  int unbounded_dir_ = 1;
};

}  // namespace

LPOutcome solve_lp(const LPProblem& p) {
  p.validate();
  Simplex s(p);
  LPOutcome out = s.solve();
  if (!verify_lp_certificate(p, out)) throw std::logic_error("solve_lp produced a certificate that fails verification");
  return out;
}

namespace {

bool primal_feasible(const LPProblem& p, const QVector& x) {
  if (x.size() != p.num_vars()) return false;
  for (Index i = 0; i < p.num_ineq(); ++i) {
    Rational lhs = 0;
    for (Index j = 0; j < p.num_vars(); ++j) lhs += p.A(i, j) * x(j);
    if (lhs > p.b(i)) return false;
  }
  for (Index i = 0; i < p.num_eq(); ++i) {
    Rational lhs = 0;
    for (Index j = 0; j < p.num_vars(); ++j) lhs += p.E(i, j) * x(j);
    if (lhs != p.e(i)) return false;
  }
  return true;
}

}  // namespace

bool verify_lp_certificate(const LPProblem& p, const LPOutcome& o) {
  try {
    p.validate();
  } catch (const std::invalid_argument&) {
    return false;
  }
  const Index n = p.num_vars(), m = p.num_ineq(), k = p.num_eq();

  if (const LPOptimal* opt = as_optimal(o)) {
    if (!primal_feasible(p, opt->x)) return false;
    if (opt->ineq_duals.size() != m || opt->eq_duals.size() != k) return false;
    for (Index i = 0; i < m; ++i)
      if (opt->ineq_duals(i) < 0) return false;
    // Stationarity: A'lambda + E'nu = -c.
    for (Index j = 0; j < n; ++j) {
      Rational s = 0;
      for (Index i = 0; i < m; ++i) s += p.A(i, j) * opt->ineq_duals(i);
      for (Index i = 0; i < k; ++i) s += p.E(i, j) * opt->eq_duals(i);
      if (s != -p.c(j)) return false;
    }
    // Exact complementary slackness.
    for (Index i = 0; i < m; ++i) {
      if (opt->ineq_duals(i) == 0) continue;
      Rational lhs = 0;
      for (Index j = 0; j < n; ++j) lhs += p.A(i, j) * opt->x(j);
      if (lhs != p.b(i)) return false;
    }
    Rational cx = 0;
    for (Index j = 0; j < n; ++j) cx += p.c(j) * opt->x(j);
    if (cx != opt->value) return false;
    Rational dual_value = 0;
    for (Index i = 0; i < m; ++i) dual_value += p.b(i) * opt->ineq_duals(i);
    for (Index i = 0; i < k; ++i) dual_value += p.e(i) * opt->eq_duals(i);
    return cx == -dual_value;
  }

  if (const LPUnbounded* ub = as_unbounded(o)) {
    if (!primal_feasible(p, ub->feasible_point)) return false;
    if (ub->ray.size() != n) return false;
    for (Index i = 0; i < m; ++i) {
      Rational lhs = 0;
      for (Index j = 0; j < n; ++j) lhs += p.A(i, j) * ub->ray(j);
      if (lhs > 0) return false;
    }
    for (Index i = 0; i < k; ++i) {
      Rational lhs = 0;
      for (Index j = 0; j < n; ++j) lhs += p.E(i, j) * ub->ray(j);
      if (lhs != 0) return false;
    }
    Rational cr = 0;
    for (Index j = 0; j < n; ++j) cr += p.c(j) * ub->ray(j);
    return cr < 0;
  }

  const LPInfeasible* inf = as_infeasible(o);
  if (inf->farkas_ineq.size() != m || inf->farkas_eq.size() != k) return false;
  for (Index i = 0; i < m; ++i)
    if (inf->farkas_ineq(i) < 0) return false;
  for (Index j = 0; j < n; ++j) {
    Rational s = 0;
    for (Index i = 0; i < m; ++i) s += p.A(i, j) * inf->farkas_ineq(i);
    for (Index i = 0; i < k; ++i) s += p.E(i, j) * inf->farkas_eq(i);
    if (s != 0) return false;
  }
  Rational rhs = 0;
  for (Index i = 0; i < m; ++i) rhs += p.b(i) * inf->farkas_ineq(i);
  for (Index i = 0; i < k; ++i) rhs += p.e(i) * inf->farkas_eq(i);
  return rhs < 0;
}

}  // namespace polycalc
