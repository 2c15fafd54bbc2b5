#include "latval/json.hpp"

namespace latval {

Json to_json(const Rational& x) { return to_string(x); }
Json to_json(const Integer& x) { return to_string(x); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Polytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
  return {{"dim", p.ambient_dim()}, {"vertices", std::move(vertices)}};
}

namespace {

Json halfspaces(const std::vector<Halfspace>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) out.push_back({{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
  return out;
}

}  // namespace

Json to_json(const HalfspaceSystem& h) {
  return {{"dim", h.ambient_dim}, {"inequalities", halfspaces(h.inequalities)}, {"equations", halfspaces(h.equations)}};
}

Json to_json(const EhrhartExpansion& e) {
  Json l = Json::array();
  for (const auto& x : e.coefficients()) l.push_back(to_json(x));
  return {{"L", std::move(l)}};
}

Json to_json(const MomentExpansion& e) {
  Json ell = Json::array();
  for (const auto& v : e.coefficients()) ell.push_back(to_json(v));
  return {{"ell", std::move(ell)}};
}

Json to_json(const OperatorSpec& op) {
  Json out{{"kind", std::string(to_string(op.kind))}};
  switch (op.kind) {
    case OperatorKind::z_ab:
    case OperatorKind::rot_z_ab_2d:
    case OperatorKind::z_ab_centroid_control:
      out["a"] = to_json(op.a);
      out["b"] = to_json(op.b);
      break;
    case OperatorKind::difference_scaled:
    case OperatorKind::projection_scaled:
      out["c"] = to_json(op.c);
      break;
    case OperatorKind::zero:
    case OperatorKind::projection_flipped_control:
      break;
  }
  return out;
}

Json to_json(const ValuationQuadruple& q) {
  return {{"label", q.label},
          {"P", to_json(q.p)},
          {"Q", to_json(q.q)},
          {"union", to_json(q.u)},
          {"intersection", q.i ? to_json(*q.i) : Json(nullptr)}};
}

Json to_json(const CellDecomposition& d) {
  Json cells = Json::array();
  for (const auto& c : d.cells) cells.push_back(to_json(c));
  Json faces = Json::array();
  for (const auto& f : d.faces)
    faces.push_back({{"dim", f.dim}, {"meets_interior", f.meets_interior}, {"polytope", to_json(f.polytope)}});
  Json census = Json::object();
  for (const auto& [m, c] : d.interior_census()) census[std::to_string(m)] = std::to_string(c);
  Json normals = Json::array();
  for (const auto& [u, c] : d.interior_facet_normals())
    normals.push_back({{"normal", to_json(u)}, {"count", std::to_string(c)}});
  Json adjacency = Json::array();
  for (const auto& [i, j] : d.adjacency()) adjacency.push_back({i, j});
  return {{"name", d.name},
          {"target", to_json(d.target)},
          {"cells", std::move(cells)},
          {"faces", std::move(faces)},
          {"interior_census", std::move(census)},
          {"interior_facet_normals", std::move(normals)},
          {"adjacency", std::move(adjacency)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw FormatError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw FormatError("expected a rational string, got " + j.dump());
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of rationals, got " + j.dump());
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw FormatError("polytope must be an object with \"dim\" and \"vertices\"");
  if (!j["dim"].is_number_unsigned()) throw FormatError("\"dim\" must be a nonnegative integer");
  if (!j["vertices"].is_array()) throw FormatError("\"vertices\" must be an array");
  const auto n = j["dim"].get<std::size_t>();
  if (n == 0) throw InputError("\"dim\" must be positive");
  std::vector<RationalVector> pts;
  for (const auto& v : j["vertices"]) {
    pts.push_back(vector_from_json(v));
    if (pts.back().size() != n)
      throw DimensionError("vertex has " + std::to_string(pts.back().size()) + " coordinates, expected " +
                           std::to_string(n));
  }
  if (pts.empty()) throw InputError("polytope has no vertices");
  return Polytope::hull(std::move(pts));
}

OperatorSpec operator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw FormatError("operator must be an object with a string \"kind\"");
  OperatorSpec op;
  op.kind = parse_operator_kind(j["kind"].get<std::string>());
  if (op.kind == OperatorKind::difference_scaled || op.kind == OperatorKind::projection_scaled) op.c = 1;
  if (j.contains("a")) op.a = rational_from_json(j["a"]);
  if (j.contains("b")) op.b = rational_from_json(j["b"]);
  if (j.contains("c")) op.c = rational_from_json(j["c"]);
  return op;
}

}  // namespace latval
