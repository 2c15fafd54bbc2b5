#pragma once

// JSON (de)serialization. Every number is a string: "p/q" or "p".

#include "latval/decompositions.hpp"
#include "latval/ehrhart.hpp"
#include "latval/operators.hpp"
#include "latval/polytope.hpp"

#include <nlohmann/json.hpp>

namespace latval {

using Json = nlohmann::json;

/// Malformed document: wrong shape or an unparsable number.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

Json to_json(const Rational& x);
Json to_json(const Integer& x);
Json to_json(const RationalVector& v);
Json to_json(const IntVector& v);
Json to_json(const Polytope& p);
Json to_json(const HalfspaceSystem& h);
Json to_json(const EhrhartExpansion& e);
Json to_json(const MomentExpansion& e);
Json to_json(const OperatorSpec& op);
Json to_json(const ValuationQuadruple& q);
Json to_json(const CellDecomposition& d);

Rational rational_from_json(const Json& j);
RationalVector vector_from_json(const Json& j);

/// {"dim": n, "vertices": [[...], ...]}. Throws FormatError for a malformed
/// document and InputError / DimensionError when the content is invalid
/// (no vertices, lengths differing from dim). The result is the convex hull,
/// so redundant points are allowed.
Polytope polytope_from_json(const Json& j);

/// {"kind": "z_ab", "a": "2", "b": "2"}; missing parameters default to 0
/// ("c" defaults to 1 for the scaled kinds).
OperatorSpec operator_from_json(const Json& j);

}  // namespace latval
