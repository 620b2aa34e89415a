// SPDX-License-Identifier: Apache-2.0

#include "polycalc/io.hpp"

namespace polycalc {

namespace {

constexpr long long kMaxPlainInteger = (1LL << 53);

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Json to_json(const Rational& q) {
  if (denominator(q) == 1) {
    const Integer& num = numerator(q);
    if (num <= kMaxPlainInteger && num >= -kMaxPlainInteger) return Json(static_cast<long long>(num));
  }
  return Json(format_rational(q));
}

Json to_json(const ExtendedRational& v) {
  if (v.is_finite()) return to_json(v.finite());
  return Json(v.str());
}

Json to_json(const QVector& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(to_json(v(i)));
  return arr;
}

Json to_json(const QMatrix& m) {
  Json arr = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    arr.push_back(std::move(row));
  }
  return arr;
}

Json to_json(const HPolyhedron& p) {
  return Json{{"dim", p.dim()},
              {"A", to_json(p.A())},
              {"b", to_json(p.b())},
              {"E", to_json(p.E())},
              {"e", to_json(p.e())}};
}

Json to_json(const GeneratedCone& k) {
  Json gens = Json::array();
  for (const QVector& g : k.generators) gens.push_back(to_json(g));
  return Json{{"dim", k.dim}, {"generators", std::move(gens)}};
}

Json to_json(const PolyhedralFunction& f) {
  Json pieces = Json::array();
  for (const AffinePiece& p : f.pieces()) pieces.push_back(Json{{"c", to_json(p.slope)}, {"d", to_json(p.offset)}});
  return Json{{"pieces", std::move(pieces)}, {"domain", to_json(f.domain())}};
}

Json to_json(const PolyMap& f) {
  return Json{{"nx", f.nx()}, {"ny", f.ny()}, {"graph", to_json(f.graph())}};
}

Json to_json(const SeparationCertificate& cert) {
  return Json{{"v", to_json(cert.v)},
              {"alpha", to_json(cert.alpha)},
              {"farkas_P", Json{{"ineq", to_json(cert.farkas_p_ineq)}, {"eq", to_json(cert.farkas_p_eq)}}},
              {"farkas_Omega", Json{{"ineq", to_json(cert.farkas_omega_ineq)}, {"eq", to_json(cert.farkas_omega_eq)}}},
              {"strict_witness", to_json(cert.strict_witness)},
              {"gap", to_json(cert.gap)}};
}

Json to_json(const ConjugateValue& v) {
  Json j{{"value", to_json(v.value)}};
  if (v.maximizer) j["maximizer"] = to_json(*v.maximizer);
  if (v.unbounded_ray) j["unbounded_ray"] = to_json(*v.unbounded_ray);
  return j;
}

Json to_json(const DualityCertificate& cert) {
  Json j{{"p_hat", to_json(cert.p_hat)},
         {"d_hat", to_json(cert.d_hat)},
         {"equality", cert.equality},
         {"qualification_holds", cert.qualification_holds},
         {"image_qualification_holds", cert.image_qualification_holds}};
  if (cert.primal_x) j["primal_x"] = to_json(*cert.primal_x);
  if (cert.dual_y) j["dual_y"] = to_json(*cert.dual_y);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational (integer or \"p/q\" string), got: " + j.dump());
}

ExtendedRational extended_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+inf" || s == "inf" || s == "-inf") return ExtendedRational::parse(s);
  }
  return ExtendedRational(rational_from_json(j));
}

QVector vector_from_json(const Json& j) {
  require(j.is_array(), "expected an array for a vector, got: " + j.dump());
  QVector v(static_cast<Index>(j.size()));
  Index i = 0;
  for (const Json& x : j) v(i++) = rational_from_json(x);
  return v;
}

QMatrix matrix_from_json(const Json& j, Index expected_cols) {
  require(j.is_array(), "expected an array of rows for a matrix, got: " + j.dump());
  const Index rows = static_cast<Index>(j.size());
  Index cols = expected_cols;
  if (rows > 0) {
    require(j.at(0).is_array(), "matrix rows must be arrays");
    cols = static_cast<Index>(j.at(0).size());
  }
  if (cols < 0) cols = 0;
  QMatrix m = zero_matrix(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j.at(static_cast<std::size_t>(i));
    require(row.is_array() && static_cast<Index>(row.size()) == cols, "ragged matrix rows");
    for (Index c = 0; c < cols; ++c) m(i, c) = rational_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return m;
}

HPolyhedron polyhedron_from_json(const Json& j) {
  require(j.is_object(), "expected an object for a polyhedron, got: " + j.dump());
  require(j.contains("dim"), "polyhedron needs a \"dim\" field");
  const Index n = j.at("dim").get<Index>();
  require(n >= 1, "polyhedron dimension must be positive");
  QMatrix a = j.contains("A") ? matrix_from_json(j.at("A"), n) : zero_matrix(0, n);
  QVector b = j.contains("b") ? vector_from_json(j.at("b")) : zero_vector(0);
  QMatrix eqm = j.contains("E") ? matrix_from_json(j.at("E"), n) : zero_matrix(0, n);
  QVector eqv = j.contains("e") ? vector_from_json(j.at("e")) : zero_vector(0);
  if (a.rows() > 0 && a.cols() != n) throw std::invalid_argument("polyhedron: A has wrong width");
  if (eqm.rows() > 0 && eqm.cols() != n) throw std::invalid_argument("polyhedron: E has wrong width");
  return HPolyhedron::make(n, std::move(a), std::move(b), std::move(eqm), std::move(eqv));
}

PolyhedralFunction function_from_json(const Json& j) {
  require(j.is_object() && j.contains("pieces") && j.contains("domain"),
          "function needs \"pieces\" and \"domain\"");
  const HPolyhedron dom = polyhedron_from_json(j.at("domain"));
  std::vector<AffinePiece> pieces;
  require(j.at("pieces").is_array() && !j.at("pieces").empty(), "function needs at least one piece");
  for (const Json& pj : j.at("pieces")) {
    require(pj.is_object() && pj.contains("c") && pj.contains("d"), "piece needs \"c\" and \"d\"");
    pieces.push_back(AffinePiece{vector_from_json(pj.at("c")), rational_from_json(pj.at("d"))});
  }
  return PolyhedralFunction::make(dom.dim(), std::move(pieces), dom);
}

PolyMap map_from_json(const Json& j) {
  require(j.is_object() && j.contains("nx") && j.contains("ny") && j.contains("graph"),
          "map needs \"nx\", \"ny\" and \"graph\"");
  return PolyMap::make(j.at("nx").get<Index>(), j.at("ny").get<Index>(), polyhedron_from_json(j.at("graph")));
}

}  // namespace polycalc
