// SPDX-License-Identifier: Apache-2.0
//
// Seeded, platform-independent random instances. Polyhedra are built around
// planted anchor points so nonemptiness (and the various qualification
// conditions) hold by construction, verified by the LP oracles where a
// profile promises them.

#pragma once

#include "polycalc/conjugate.hpp"
#include "polycalc/setvalued.hpp"

#include <cstdint>
#include <random>

namespace polycalc {

/// mt19937_64 with hand-rolled bounded sampling, so that identical seeds
/// produce identical instances on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform integer in [lo, hi], rejection-sampled.
  long uniform(long lo, long hi);

  /// True with probability num/den.
  bool chance(long num, long den) { return uniform(1, den) <= num; }

  QVector vector(Index n, long bound);
  QVector nonzero_vector(Index n, long bound);

 private:
  std::mt19937_64 engine_;
};

struct GenProfile {
  Index dims = 2;
  Index rows = 4;
  long coeff_bound = 5;
};

LPProblem gen_lp(SeededRng& rng, const GenProfile& p);

/// Nonempty polyhedron containing the returned anchor; rows are active at
/// the anchor with probability about one half.
struct AnchoredPolyhedron {
  HPolyhedron set;
  QVector anchor;
};
AnchoredPolyhedron gen_polyhedron_planted(SeededRng& rng, const GenProfile& p);

/// Unconstrained-random polyhedron; may well be empty.
HPolyhedron gen_polyhedron_free(SeededRng& rng, const GenProfile& p);

struct PolyhedronPair {
  HPolyhedron p;
  HPolyhedron omega;
  QVector common_point;  // in both sets for the common-point generator
};

/// Both sets contain the common point; with some probability an opposing
/// half-space pair is injected so ri-qualification fails on a subset of
/// the instances.
PolyhedronPair gen_pair_with_common_point(SeededRng& rng, const GenProfile& p);

/// Two nonempty sets, anchored together or apart; may or may not intersect.
PolyhedronPair gen_separation_pair(SeededRng& rng, const GenProfile& p);

struct AnchoredFunction {
  PolyhedralFunction f;
  QVector anchor;  // in dom f
};
AnchoredFunction gen_function(SeededRng& rng, const GenProfile& p);

struct QualifiedFunctionPair {
  PolyhedralFunction f;
  PolyhedralFunction g;
  QVector common_point;  // in dom f cap ri(dom g), oracle-verified
};
QualifiedFunctionPair gen_qualified_function_pair(SeededRng& rng, const GenProfile& p);

struct FenchelInstance {
  PolyhedralFunction f;  // on R^n
  PolyhedralFunction g;  // on R^m
  QMatrix a;             // m x n
};
/// dom(g o A) meets ri(dom f), oracle-verified; dom f is usually bounded so
/// the primal value is finite most of the time.
FenchelInstance gen_qualified_fenchel(SeededRng& rng, const GenProfile& p);

struct ChainInstance {
  PolyhedralFunction f;  // on R^m
  QMatrix a;             // m x n
  QVector x;             // A x in dom f
};
ChainInstance gen_chain_instance(SeededRng& rng, const GenProfile& p);

struct AnchoredMap {
  PolyMap f;
  QVector x;
  QVector y;  // (x, y) on the graph
};
AnchoredMap gen_map(SeededRng& rng, Index nx, Index ny, const GenProfile& p);

struct MapSumInstance {
  PolyMap f1;
  PolyMap f2;
  SplitPoint split;
};
MapSumInstance gen_map_sum_instance(SeededRng& rng, const GenProfile& p);

struct MapChainInstance {
  PolyMap f;
  PolyMap g;
  QVector x;
  QVector y;
  QVector z;
};
MapChainInstance gen_map_chain_instance(SeededRng& rng, const GenProfile& p);

}  // namespace polycalc
