// SPDX-License-Identifier: Apache-2.0

#include "polycalc/scenario.hpp"

#include "polycalc/errors.hpp"

#include <chrono>
#include <sstream>

namespace polycalc {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Ok: return "ok";
    case ReportStatus::QualificationFailed: return "qualification-failed";
    case ReportStatus::Infeasible: return "infeasible";
    case ReportStatus::InvalidInput: return "invalid-input";
  }
  throw std::logic_error("unreachable");
}

Json Report::to_json(const std::string& command) const {
  return Json{{"command", command},
              {"status", to_string(status)},
              {"certificates", certificates},
              {"timing_ms", timing_ms}};
}

namespace {

const Json& field(const Json& payload, const char* name) {
  if (!payload.is_object() || !payload.contains(name))
    throw std::invalid_argument(std::string("payload is missing field \"") + name + "\"");
  return payload.at(name);
}

Json dispatch(const std::string& command, const Json& payload) {
  if (command == "ri-point") {
    const HPolyhedron p = polyhedron_from_json(field(payload, "P"));
    const RelativeInteriorReport rep = implicit_equalities_report(p);
    Json impl = Json::array();
    for (Index i : rep.implicit_equality_rows) impl.push_back(i);
    return Json{{"ri_point", to_json(rep.ri_point)},
                {"implicit_equality_rows", std::move(impl)},
                {"affine_dim", rep.affine_dim}};
  }
  if (command == "separate") {
    const HPolyhedron p = polyhedron_from_json(field(payload, "P"));
    const HPolyhedron omega = polyhedron_from_json(field(payload, "Omega"));
    const SeparationResult res = properly_separate(p, omega);
    if (res.separable()) return Json{{"separable", true}, {"certificate", to_json(*res.certificate)}};
    return Json{{"separable", false}, {"witness_in_p_cap_ri_omega", to_json(*res.not_separable_witness)}};
  }
  if (command == "normal-cone") {
    const HPolyhedron p = polyhedron_from_json(field(payload, "P"));
    const QVector x = vector_from_json(field(payload, "x"));
    const auto cone = normal_cone_at(p, x);
    if (!cone) return Json{{"point_in_set", false}};
    return Json{{"point_in_set", true}, {"cone", to_json(*cone)}};
  }
  if (command == "intersection-rule") {
    const HPolyhedron p = polyhedron_from_json(field(payload, "P"));
    const HPolyhedron omega = polyhedron_from_json(field(payload, "Omega"));
    const QVector x = vector_from_json(field(payload, "x"));
    const IntersectionRuleReport rep = normal_intersection_rule(p, omega, x);
    Json decs = Json::array();
    for (const NormalDecomposition& d : rep.decompositions)
      decs.push_back(Json{{"target", to_json(d.target)},
                          {"part_P", to_json(d.part_p)},
                          {"part_Omega", to_json(d.part_omega)},
                          {"multipliers", to_json(d.multipliers)}});
    return Json{{"qualification_holds", rep.qualification_holds},
                {"rule_holds", rep.rule_holds},
                {"cone_intersection", to_json(rep.cone_intersection)},
                {"cone_sum", to_json(rep.cone_sum)},
                {"decompositions", std::move(decs)}};
  }
  if (command == "subdiff") {
    const PolyhedralFunction f = function_from_json(field(payload, "f"));
    const QVector x = vector_from_json(field(payload, "x"));
    return Json{{"subdifferential", to_json(subdifferential_at(f, x))}};
  }
  if (command == "subdiff-sum") {
    const PolyhedralFunction f1 = function_from_json(field(payload, "f1"));
    const PolyhedralFunction f2 = function_from_json(field(payload, "f2"));
    const QVector x = vector_from_json(field(payload, "x"));
    const SubdiffSumReport rep = subdiff_sum_rule_check(f1, f2, x);
    return Json{{"qualification_holds", rep.qualification_holds},
                {"rule_holds", rep.rule_holds},
                {"left", to_json(rep.left)},
                {"right", to_json(rep.right)}};
  }
  if (command == "subdiff-chain") {
    const PolyhedralFunction f = function_from_json(field(payload, "f"));
    const QMatrix a = matrix_from_json(field(payload, "A"));
    const QVector x = vector_from_json(field(payload, "x"));
    const SubdiffChainReport rep = subdiff_chain_rule(f, a, x);
    return Json{{"rule_holds", rep.rule_holds}, {"left", to_json(rep.left)}, {"right", to_json(rep.right)}};
  }
  if (command == "coderivative") {
    const PolyMap f = map_from_json(field(payload, "F"));
    return Json{{"coderivative", to_json(coderivative_at(f, vector_from_json(field(payload, "x")),
                                                         vector_from_json(field(payload, "y")),
                                                         vector_from_json(field(payload, "ystar"))))}};
  }
  if (command == "coderiv-sum") {
    const PolyMap f1 = map_from_json(field(payload, "F1"));
    const PolyMap f2 = map_from_json(field(payload, "F2"));
    const Json& sj = field(payload, "split");
    const SplitPoint split{vector_from_json(field(sj, "x")), vector_from_json(field(sj, "y")),
                           vector_from_json(field(sj, "y1")), vector_from_json(field(sj, "y2"))};
    const CoderivSumReport rep =
        coderivative_sum_rule_check(f1, f2, split, vector_from_json(field(payload, "ystar")));
    return Json{{"qualification_holds", rep.qualification_holds},
                {"rule_holds", rep.rule_holds},
                {"left", to_json(rep.left)},
                {"right", to_json(rep.right)}};
  }
  if (command == "coderiv-chain") {
    const PolyMap f = map_from_json(field(payload, "F"));
    const PolyMap g = map_from_json(field(payload, "G"));
    const CoderivChainReport rep = coderivative_chain_rule_check(
        f, g, vector_from_json(field(payload, "x")), vector_from_json(field(payload, "y")),
        vector_from_json(field(payload, "z")), vector_from_json(field(payload, "zstar")));
    return Json{{"qualification_holds_graph_g", rep.qualification_holds_graph_g},
                {"qualification_holds_graph_f", rep.qualification_holds_graph_f},
                {"rule_holds", rep.rule_holds},
                {"left", to_json(rep.left)},
                {"right", to_json(rep.right)}};
  }
  if (command == "conjugate") {
    const PolyhedralFunction f = function_from_json(field(payload, "f"));
    return Json{{"conjugate", to_json(conjugate_eval(f, vector_from_json(field(payload, "xstar"))))}};
  }
  if (command == "support") {
    const HPolyhedron omega = polyhedron_from_json(field(payload, "Omega"));
    return Json{{"support", to_json(support_eval(omega, vector_from_json(field(payload, "xstar"))))}};
  }
  if (command == "conj-sum") {
    const PolyhedralFunction f = function_from_json(field(payload, "f"));
    const PolyhedralFunction g = function_from_json(field(payload, "g"));
    const ConjugateSumResult res = conjugate_sum_rule(f, g, vector_from_json(field(payload, "xstar")));
    Json j{{"value", to_json(res.value)}};
    if (res.xstar_f) {
      j["xstar_f"] = to_json(*res.xstar_f);
      j["xstar_g"] = to_json(*res.xstar_g);
      j["part_f"] = to_json(*res.part_f);
      j["part_g"] = to_json(*res.part_g);
    }
    return j;
  }
  if (command == "conj-chain") {
    const PolyhedralFunction g = function_from_json(field(payload, "g"));
    const QMatrix a = matrix_from_json(field(payload, "A"));
    const ConjugateChainResult res = conjugate_chain_rule(g, a, vector_from_json(field(payload, "xstar")));
    Json j{{"value", to_json(res.value)}};
    if (res.ystar) j["ystar"] = to_json(*res.ystar);
    return j;
  }
  if (command == "infconv") {
    const PolyhedralFunction f = function_from_json(field(payload, "f"));
    const PolyhedralFunction g = function_from_json(field(payload, "g"));
    const InfConvResult res = infimal_convolution_eval(f, g, vector_from_json(field(payload, "x")));
    Json j{{"value", to_json(res.value)}};
    if (res.split_u) {
      j["split_u"] = to_json(*res.split_u);
      j["split_v"] = to_json(*res.split_v);
    }
    return j;
  }
  if (command == "fenchel") {
    const PolyhedralFunction f = function_from_json(field(payload, "f"));
    const PolyhedralFunction g = function_from_json(field(payload, "g"));
    const QMatrix a = matrix_from_json(field(payload, "A"));
    return to_json(fenchel_solve(f, g, a));
  }
  throw std::invalid_argument("unknown command: " + command);
}

}  // namespace

Report run_scenario(const Scenario& s) {
  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    rep.certificates = dispatch(s.command, s.payload);
    // A fenchel run that fails its qualification is still fully reported.
    if (s.command == "fenchel" && rep.certificates.contains("qualification_holds") &&
        !rep.certificates.at("qualification_holds").get<bool>())
      rep.status = ReportStatus::QualificationFailed;
  } catch (const QualificationError& err) {
    rep.status = ReportStatus::QualificationFailed;
    rep.certificates = Json{{"error", err.what()}};
  } catch (const InfeasibleError& err) {
    rep.status = ReportStatus::Infeasible;
    rep.certificates = Json{{"error", err.what()}};
  } catch (const Json::exception& err) {
    rep.status = ReportStatus::InvalidInput;
    rep.certificates = Json{{"error", err.what()}};
  } catch (const std::invalid_argument& err) {
    rep.status = ReportStatus::InvalidInput;
    rep.certificates = Json{{"error", err.what()}};
  }
  const auto stop = std::chrono::steady_clock::now();
  rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return rep;
}

Json generate_payload(const std::string& kind, std::uint64_t seed, const GenProfile& profile) {
  SeededRng rng(seed);
  if (kind == "lp") {
    const LPProblem p = gen_lp(rng, profile);
    return Json{{"c", to_json(p.c)}, {"A", to_json(p.A)}, {"b", to_json(p.b)},
                {"E", to_json(p.E)}, {"e", to_json(p.e)}};
  }
  if (kind == "polyhedron") return Json{{"P", to_json(gen_polyhedron_planted(rng, profile).set)}};
  if (kind == "polyhedron-pair") {
    const PolyhedronPair pair = gen_separation_pair(rng, profile);
    return Json{{"P", to_json(pair.p)}, {"Omega", to_json(pair.omega)}};
  }
  if (kind == "polyhedron-pair-with-common-point") {
    const PolyhedronPair pair = gen_pair_with_common_point(rng, profile);
    return Json{{"P", to_json(pair.p)}, {"Omega", to_json(pair.omega)}, {"x", to_json(pair.common_point)}};
  }
  if (kind == "function") {
    const AnchoredFunction inst = gen_function(rng, profile);
    return Json{{"f", to_json(inst.f)}, {"x", to_json(inst.anchor)}};
  }
  if (kind == "function-pair-qualified") {
    const QualifiedFunctionPair pair = gen_qualified_function_pair(rng, profile);
    return Json{{"f1", to_json(pair.f)}, {"f2", to_json(pair.g)}, {"x", to_json(pair.common_point)}};
  }
  if (kind == "qualified-fenchel") {
    const FenchelInstance inst = gen_qualified_fenchel(rng, profile);
    return Json{{"f", to_json(inst.f)}, {"g", to_json(inst.g)}, {"A", to_json(inst.a)}};
  }
  if (kind == "chain") {
    const ChainInstance inst = gen_chain_instance(rng, profile);
    return Json{{"f", to_json(inst.f)}, {"A", to_json(inst.a)}, {"x", to_json(inst.x)}};
  }
  if (kind == "map") {
    const AnchoredMap inst = gen_map(rng, std::max<Index>(1, profile.dims / 2), std::max<Index>(1, profile.dims / 2), profile);
    QVector ystar = rng.vector(inst.f.ny(), 3);
    return Json{{"F", to_json(inst.f)}, {"x", to_json(inst.x)}, {"y", to_json(inst.y)}, {"ystar", to_json(ystar)}};
  }
  if (kind == "map-pair-sum") {
    const MapSumInstance inst = gen_map_sum_instance(rng, profile);
    return Json{{"F1", to_json(inst.f1)},
                {"F2", to_json(inst.f2)},
                {"split", Json{{"x", to_json(inst.split.x)},
                               {"y", to_json(inst.split.y)},
                               {"y1", to_json(inst.split.y1)},
                               {"y2", to_json(inst.split.y2)}}},
                {"ystar", to_json(rng.vector(inst.f1.ny(), 3))}};
  }
  if (kind == "map-pair-chain") {
    const MapChainInstance inst = gen_map_chain_instance(rng, profile);
    return Json{{"F", to_json(inst.f)},   {"G", to_json(inst.g)},   {"x", to_json(inst.x)},
                {"y", to_json(inst.y)},   {"z", to_json(inst.z)},   {"zstar", to_json(rng.vector(inst.g.ny(), 3))}};
  }
  throw std::invalid_argument("unknown generator kind: " + kind);
}

}  // namespace polycalc
