// SPDX-License-Identifier: Apache-2.0

#include "polycalc/generator.hpp"

namespace polycalc {

long SeededRng::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("SeededRng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return lo + static_cast<long>(r % span);
}

QVector SeededRng::vector(Index n, long bound) {
  QVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = uniform(-bound, bound);
  return v;
}

QVector SeededRng::nonzero_vector(Index n, long bound) {
  for (;;) {
    QVector v = vector(n, bound);
    if (!is_zero_vector(v)) return v;
  }
}

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

// Rows around an anchor: active with probability act_num/act_den,
// otherwise a strict slack; equalities sparingly.
HPolyhedron planted_rows(SeededRng& rng, Index n, Index rows, long bound, const QVector& anchor,
                         long act_num, long act_den, bool allow_equalities) {
  std::vector<QVector> ineq, eq;
  std::vector<Rational> bi, ei;
  Index neq = 0;
  for (Index r = 0; r < rows; ++r) {
    const QVector a = rng.nonzero_vector(n, bound);
    if (allow_equalities && neq + 1 < n && rng.chance(1, 6)) {
      eq.push_back(a);
      ei.push_back(dot(a, anchor));
      ++neq;
      continue;
    }
    const Rational slack = rng.chance(act_num, act_den) ? 0 : rng.uniform(1, 3);
    ineq.push_back(a);
    bi.push_back(dot(a, anchor) + slack);
  }
  QMatrix am = zero_matrix(static_cast<Index>(ineq.size()), n);
  QVector bv(static_cast<Index>(ineq.size()));
  for (std::size_t i = 0; i < ineq.size(); ++i) {
    for (Index j = 0; j < n; ++j) am(static_cast<Index>(i), j) = ineq[i](j);
    bv(static_cast<Index>(i)) = bi[i];
  }
  QMatrix em = zero_matrix(static_cast<Index>(eq.size()), n);
  QVector ev(static_cast<Index>(eq.size()));
  for (std::size_t i = 0; i < eq.size(); ++i) {
    for (Index j = 0; j < n; ++j) em(static_cast<Index>(i), j) = eq[i](j);
    ev(static_cast<Index>(i)) = ei[i];
  }
  return HPolyhedron::make(n, std::move(am), std::move(bv), std::move(em), std::move(ev));
}

std::vector<AffinePiece> random_pieces(SeededRng& rng, Index n, long bound) {
  const long count = rng.uniform(1, 3);
  std::vector<AffinePiece> pieces;
  for (long i = 0; i < count; ++i)
    pieces.push_back(AffinePiece{rng.vector(n, bound), Rational(rng.uniform(-bound, bound))});
  return pieces;
}

// Box rows keeping every coordinate within distance 3 of the anchor.
void append_box(std::vector<QVector>& rows, std::vector<Rational>& rhs, const QVector& anchor) {
  const Index n = anchor.size();
  for (Index j = 0; j < n; ++j) {
    QVector up = zero_vector(n), down = zero_vector(n);
    up(j) = 1;
    down(j) = -1;
    rows.push_back(up);
    rhs.push_back(anchor(j) + 3);
    rows.push_back(down);
    rhs.push_back(-anchor(j) + 3);
  }
}

HPolyhedron rows_to_polyhedron(Index n, const std::vector<QVector>& rows, const std::vector<Rational>& rhs) {
  QMatrix a = zero_matrix(static_cast<Index>(rows.size()), n);
  QVector b(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Index j = 0; j < n; ++j) a(static_cast<Index>(i), j) = rows[i](j);
    b(static_cast<Index>(i)) = rhs[i];
  }
  return HPolyhedron::make(n, std::move(a), std::move(b));
}

// Domain for a function: whole space, a planted neighborhood, or a bounded
// box around the anchor.
HPolyhedron function_domain(SeededRng& rng, Index n, Index rows, long bound, const QVector& anchor,
                            bool force_bounded) {
  if (!force_bounded && rng.chance(1, 4)) return HPolyhedron(n);
  std::vector<QVector> rws;
  std::vector<Rational> rhs;
  const long extra = rng.uniform(0, std::max<long>(0, static_cast<long>(rows) - 2));
  for (long r = 0; r < extra; ++r) {
    const QVector a = rng.nonzero_vector(n, bound);
    const Rational slack = rng.chance(1, 3) ? 0 : rng.uniform(1, 3);
    rws.push_back(a);
    rhs.push_back(dot(a, anchor) + slack);
  }
  if (force_bounded || rng.chance(1, 2)) append_box(rws, rhs, anchor);
  if (rws.empty()) return HPolyhedron(n);
  return rows_to_polyhedron(n, rws, rhs);
}

}  // namespace

LPProblem gen_lp(SeededRng& rng, const GenProfile& p) {
  const Index n = std::max<Index>(1, static_cast<Index>(rng.uniform(1, p.dims)));
  const Index m = static_cast<Index>(rng.uniform(1, std::max<long>(1, p.rows)));
  const Index k = rng.chance(1, 3) ? static_cast<Index>(rng.uniform(1, 2)) : 0;
  QVector c = rng.chance(1, 8) ? zero_vector(n) : rng.vector(n, p.coeff_bound);

  const bool plant = rng.chance(2, 3);
  const QVector anchor = rng.vector(n, 2);
  QMatrix a = zero_matrix(m, n);
  QVector b(m);
  for (Index i = 0; i < m; ++i) {
    const QVector row = rng.nonzero_vector(n, p.coeff_bound);
    for (Index j = 0; j < n; ++j) a(i, j) = row(j);
    b(i) = plant ? Rational(dot(row, anchor) + rng.uniform(0, 3)) : Rational(rng.uniform(-p.coeff_bound, p.coeff_bound));
  }
  QMatrix em = zero_matrix(k, n);
  QVector ev(k);
  for (Index i = 0; i < k; ++i) {
    const QVector row = rng.nonzero_vector(n, 3);
    for (Index j = 0; j < n; ++j) em(i, j) = row(j);
    ev(i) = plant ? dot(row, anchor) : Rational(rng.uniform(-3, 3));
  }
  return LPProblem::minimize(std::move(c), std::move(a), std::move(b), std::move(em), std::move(ev));
}

AnchoredPolyhedron gen_polyhedron_planted(SeededRng& rng, const GenProfile& p) {
  const Index n = std::max<Index>(1, static_cast<Index>(rng.uniform(1, p.dims)));
  const QVector anchor = rng.vector(n, 2);
  const Index rows = static_cast<Index>(rng.uniform(1, std::max<long>(1, p.rows)));
  return AnchoredPolyhedron{planted_rows(rng, n, rows, p.coeff_bound, anchor, 1, 2, true), anchor};
}

HPolyhedron gen_polyhedron_free(SeededRng& rng, const GenProfile& p) {
  const Index n = std::max<Index>(1, static_cast<Index>(rng.uniform(1, p.dims)));
  const Index m = static_cast<Index>(rng.uniform(1, std::max<long>(1, p.rows)));
  QMatrix a = zero_matrix(m, n);
  QVector b(m);
  for (Index i = 0; i < m; ++i) {
    const QVector row = rng.nonzero_vector(n, p.coeff_bound);
    for (Index j = 0; j < n; ++j) a(i, j) = row(j);
    b(i) = rng.uniform(-p.coeff_bound, p.coeff_bound);
  }
  return HPolyhedron::make(n, std::move(a), std::move(b));
}

PolyhedronPair gen_pair_with_common_point(SeededRng& rng, const GenProfile& p) {
  const Index n = std::max<Index>(1, static_cast<Index>(rng.uniform(1, p.dims)));
  const QVector anchor = rng.vector(n, 2);
  const Index rows = std::max<Index>(1, static_cast<Index>(p.rows) / 2);
  GenProfile sub = p;
  sub.dims = n;
  HPolyhedron first = planted_rows(rng, n, rows, p.coeff_bound, anchor, 1, 2, true);
  HPolyhedron second = planted_rows(rng, n, rows, p.coeff_bound, anchor, 1, 2, true);
  if (rng.chance(1, 4)) {
    // Opposing half-spaces through the anchor: the intersection flattens
    // and the ri-qualification usually fails.
    const QVector a = rng.nonzero_vector(n, p.coeff_bound);
    QMatrix arow = zero_matrix(1, n);
    QMatrix brow = zero_matrix(1, n);
    for (Index j = 0; j < n; ++j) {
      arow(0, j) = a(j);
      brow(0, j) = -a(j);
    }
    QVector abound(1), bbound(1);
    abound(0) = dot(a, anchor);
    bbound(0) = -dot(a, anchor);
    first = intersect(first, HPolyhedron::make(n, std::move(arow), std::move(abound)));
    second = intersect(second, HPolyhedron::make(n, std::move(brow), std::move(bbound)));
  }
  return PolyhedronPair{std::move(first), std::move(second), anchor};
}

PolyhedronPair gen_separation_pair(SeededRng& rng, const GenProfile& p) {
  const Index n = std::max<Index>(1, static_cast<Index>(rng.uniform(1, p.dims)));
  const QVector anchor1 = rng.vector(n, 2);
  QVector anchor2 = anchor1;
  if (rng.chance(1, 2)) anchor2 += rng.vector(n, 3);
  const Index rows = std::max<Index>(1, static_cast<Index>(p.rows) / 2);
  HPolyhedron first = planted_rows(rng, n, rows, p.coeff_bound, anchor1, 1, 2, rng.chance(1, 2));
  HPolyhedron second = planted_rows(rng, n, rows, p.coeff_bound, anchor2, 1, 2, rng.chance(1, 2));
  return PolyhedronPair{std::move(first), std::move(second), anchor1};
}

AnchoredFunction gen_function(SeededRng& rng, const GenProfile& p) {
  const Index n = std::max<Index>(1, static_cast<Index>(rng.uniform(1, p.dims)));
  const QVector anchor = rng.vector(n, 2);
  PolyhedralFunction f = PolyhedralFunction::make(
      n, random_pieces(rng, n, p.coeff_bound), function_domain(rng, n, p.rows, p.coeff_bound, anchor, false));
  return AnchoredFunction{std::move(f), anchor};
}

QualifiedFunctionPair gen_qualified_function_pair(SeededRng& rng, const GenProfile& p) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Index n = std::max<Index>(1, static_cast<Index>(rng.uniform(1, p.dims)));
    const QVector anchor = rng.vector(n, 2);
    PolyhedralFunction f = PolyhedralFunction::make(
        n, random_pieces(rng, n, p.coeff_bound), function_domain(rng, n, p.rows, p.coeff_bound, anchor, false));
    PolyhedralFunction g = PolyhedralFunction::make(
        n, random_pieces(rng, n, p.coeff_bound), function_domain(rng, n, p.rows, p.coeff_bound, anchor, false));
    const auto witness = meets_relative_interior(f.domain(), g.domain(), identity_matrix(n));
    if (!witness) continue;
    if (!f.domain().contains_point(anchor) || !g.domain().contains_point(anchor)) continue;
    return QualifiedFunctionPair{std::move(f), std::move(g), anchor};
  }
  throw std::logic_error("gen_qualified_function_pair: no qualified instance after 200 attempts");
}

FenchelInstance gen_qualified_fenchel(SeededRng& rng, const GenProfile& p) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Index n = std::max<Index>(1, static_cast<Index>(rng.uniform(1, std::min<long>(p.dims, 3))));
    const Index m = std::max<Index>(1, static_cast<Index>(rng.uniform(1, std::min<long>(p.dims, 3))));
    QMatrix a = zero_matrix(m, n);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < n; ++j) a(i, j) = rng.uniform(-2, 2);
    const QVector x0 = rng.vector(n, 2);
    const QVector y0 = a * x0;
    const bool bounded = rng.chance(3, 4);
    PolyhedralFunction f = PolyhedralFunction::make(
        n, random_pieces(rng, n, p.coeff_bound), function_domain(rng, n, p.rows, p.coeff_bound, x0, bounded));
    PolyhedralFunction g = PolyhedralFunction::make(
        m, random_pieces(rng, m, p.coeff_bound), function_domain(rng, m, p.rows, p.coeff_bound, y0, false));
    const HPolyhedron pre = affine_preimage(g.domain(), a);
    if (is_empty(pre).empty) continue;
    if (!meets_relative_interior(pre, f.domain(), identity_matrix(n))) continue;
    return FenchelInstance{std::move(f), std::move(g), std::move(a)};
  }
  throw std::logic_error("gen_qualified_fenchel: no qualified instance after 200 attempts");
}

ChainInstance gen_chain_instance(SeededRng& rng, const GenProfile& p) {
  const Index n = std::max<Index>(1, static_cast<Index>(rng.uniform(1, std::min<long>(p.dims, 3))));
  const Index m = std::max<Index>(1, static_cast<Index>(rng.uniform(1, std::min<long>(p.dims, 3))));
  for (int attempt = 0; attempt < 200; ++attempt) {
    QMatrix a = zero_matrix(m, n);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < n; ++j) a(i, j) = rng.uniform(-2, 2);
    const QVector x = rng.vector(n, 2);
    const QVector image = a * x;
    PolyhedralFunction f = PolyhedralFunction::make(
        m, random_pieces(rng, m, p.coeff_bound), function_domain(rng, m, p.rows, p.coeff_bound, image, false));
    if (!f.domain().contains_point(image)) continue;
    return ChainInstance{std::move(f), std::move(a), x};
  }
  throw std::logic_error("gen_chain_instance: no instance after 200 attempts");
}

AnchoredMap gen_map(SeededRng& rng, Index nx, Index ny, const GenProfile& p) {
  const QVector x = rng.vector(nx, 2);
  const QVector y = rng.vector(ny, 2);
  QVector anchor(nx + ny);
  anchor.head(nx) = x;
  anchor.tail(ny) = y;
  const Index rows = std::max<Index>(1, static_cast<Index>(rng.uniform(1, std::max<long>(1, p.rows / 2))));
  HPolyhedron graph = planted_rows(rng, nx + ny, rows, p.coeff_bound, anchor, 1, 2, true);
  return AnchoredMap{PolyMap::make(nx, ny, std::move(graph)), x, y};
}

MapSumInstance gen_map_sum_instance(SeededRng& rng, const GenProfile& p) {
  const Index nx = std::max<Index>(1, static_cast<Index>(rng.uniform(1, 2)));
  const Index ny = std::max<Index>(1, static_cast<Index>(rng.uniform(1, 2)));
  const QVector x = rng.vector(nx, 2);
  const QVector y1 = rng.vector(ny, 2);
  const QVector y2 = rng.vector(ny, 2);
  QVector anchor1(nx + ny), anchor2(nx + ny);
  anchor1.head(nx) = x;
  anchor1.tail(ny) = y1;
  anchor2.head(nx) = x;
  anchor2.tail(ny) = y2;
  const Index rows = std::max<Index>(1, static_cast<Index>(rng.uniform(1, std::max<long>(1, p.rows / 2))));
  PolyMap f1 = PolyMap::make(nx, ny, planted_rows(rng, nx + ny, rows, p.coeff_bound, anchor1, 1, 2, true));
  PolyMap f2 = PolyMap::make(nx, ny, planted_rows(rng, nx + ny, rows, p.coeff_bound, anchor2, 1, 2, true));
  SplitPoint split{x, y1 + y2, y1, y2};
  return MapSumInstance{std::move(f1), std::move(f2), std::move(split)};
}

MapChainInstance gen_map_chain_instance(SeededRng& rng, const GenProfile& p) {
  const Index nx = std::max<Index>(1, static_cast<Index>(rng.uniform(1, 2)));
  const Index ny = std::max<Index>(1, static_cast<Index>(rng.uniform(1, 2)));
  const Index nz = std::max<Index>(1, static_cast<Index>(rng.uniform(1, 2)));
  const QVector x = rng.vector(nx, 2);
  const QVector y = rng.vector(ny, 2);
  const QVector z = rng.vector(nz, 2);
  QVector af(nx + ny), ag(ny + nz);
  af.head(nx) = x;
  af.tail(ny) = y;
  ag.head(ny) = y;
  ag.tail(nz) = z;
  const Index rows = std::max<Index>(1, static_cast<Index>(rng.uniform(1, std::max<long>(1, p.rows / 2))));
  PolyMap f = PolyMap::make(nx, ny, planted_rows(rng, nx + ny, rows, p.coeff_bound, af, 1, 2, true));
  PolyMap g = PolyMap::make(ny, nz, planted_rows(rng, ny + nz, rows, p.coeff_bound, ag, 1, 2, true));
  return MapChainInstance{std::move(f), std::move(g), x, y, z};
}

}  // namespace polycalc
