// SPDX-License-Identifier: Apache-2.0
//
// Lossless JSON encoding of every domain type. Rationals travel as bare
// integers when the denominator is 1 and the numerator is small, as "p/q"
// strings otherwise; matrices are row-major arrays of arrays.

#pragma once

#include "polycalc/conjugate.hpp"
#include "polycalc/separation.hpp"
#include "polycalc/setvalued.hpp"

#include <json.hpp>

namespace polycalc {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const ExtendedRational& v);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Json to_json(const HPolyhedron& p);
Json to_json(const GeneratedCone& k);
Json to_json(const PolyhedralFunction& f);
Json to_json(const PolyMap& f);
Json to_json(const SeparationCertificate& cert);
Json to_json(const ConjugateValue& v);
Json to_json(const DualityCertificate& cert);

/// All parsers throw std::invalid_argument on malformed input.
Rational rational_from_json(const Json& j);
ExtendedRational extended_from_json(const Json& j);
QVector vector_from_json(const Json& j);
QMatrix matrix_from_json(const Json& j, Index expected_cols = -1);
HPolyhedron polyhedron_from_json(const Json& j);
PolyhedralFunction function_from_json(const Json& j);
PolyMap map_from_json(const Json& j);

}  // namespace polycalc
