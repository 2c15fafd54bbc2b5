#include "latval/operators.hpp"

#include "latval/ehrhart.hpp"

#include <array>
#include <map>
#include <set>

namespace latval {

namespace {

constexpr std::array<std::pair<OperatorKind, std::string_view>, 7> kKindNames{{
    {OperatorKind::difference_scaled, "difference_scaled"},
    {OperatorKind::z_ab, "z_ab"},
    {OperatorKind::projection_scaled, "projection_scaled"},
    {OperatorKind::rot_z_ab_2d, "rot_z_ab_2d"},
    {OperatorKind::zero, "zero"},
    {OperatorKind::z_ab_centroid_control, "z_ab_centroid_control"},
    {OperatorKind::projection_flipped_control, "projection_flipped_control"},
}};

Polytope origin(std::size_t n) { return Polytope::point(zero_vector(n)); }

// a (P - s) + b (-P + s) for a given shift s.
Polytope shifted_pair(const Polytope& p, const Rational& a, const Rational& b, const RationalVector& s) {
  if (a < 0 || b < 0) throw InputError("z_ab: parameters must be nonnegative");
  const std::size_t n = p.ambient_dim();
  const RationalVector minus_s = scaled(s, Rational(-1));
  Polytope result = origin(n);
  if (a != 0) result = minkowski_sum(result, scale(translate(p, minus_s), a));
  if (b != 0) result = minkowski_sum(result, scale(translate(negate(p), s), b));
  return result;
}

Polytope flipped_projection(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  if (dim(p) != n) return projection_body(p);
  auto areas = facet_area_vectors(p);
  areas.front() = scaled(areas.front(), Rational(-1));
  Polytope result = origin(n);
  for (const auto& z : areas) result = minkowski_sum(result, Polytope::from_extreme_points({zero_vector(n), z}));
  return result;
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

OperatorKind parse_operator_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw InputError("unknown operator kind: " + std::string(name));
}

void OperatorSpec::validate(std::size_t n) const {
  if (a < 0 || b < 0 || c < 0) throw InputError("operator parameters must be nonnegative");
  if (kind == OperatorKind::rot_z_ab_2d && n != 0 && n != 2)
    throw InputError("rot_z_ab_2d is only defined in ambient dimension 2");
}

bool OperatorSpec::contravariant() const {
  return kind == OperatorKind::projection_scaled || kind == OperatorKind::rot_z_ab_2d ||
         kind == OperatorKind::projection_flipped_control;
}

bool OperatorSpec::is_control() const {
  return kind == OperatorKind::z_ab_centroid_control || kind == OperatorKind::projection_flipped_control;
}

std::string OperatorSpec::describe() const {
  std::string s(to_string(kind));
  switch (kind) {
    case OperatorKind::z_ab:
    case OperatorKind::rot_z_ab_2d:
    case OperatorKind::z_ab_centroid_control:
      return s + "(a=" + latval::to_string(a) + ",b=" + latval::to_string(b) + ")";
    case OperatorKind::difference_scaled:
    case OperatorKind::projection_scaled:
      return s + "(c=" + latval::to_string(c) + ")";
    default:
      return s;
  }
}

Polytope difference_body(const Polytope& p) { return minkowski_sum(p, negate(p)); }

Polytope z_ab(const Polytope& p, const Rational& a, const Rational& b) {
  if (a < 0 || b < 0) throw InputError("z_ab: parameters must be nonnegative");
  if (a == 0 && b == 0) return origin(p.ambient_dim());
  return shifted_pair(p, a, b, discrete_steiner(p));
}

std::vector<RationalVector> projection_generators(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  const std::size_t d = dim(p);
  if (d == n) {
    std::vector<RationalVector> g;
    for (const auto& z : facet_area_vectors(p)) g.push_back(scaled(z, Rational(1, 2)));
    return g;
  }
  if (n >= 2 && d == n - 1) return {hyperplane_area_vector(p)};
  return {};
}

namespace {

RationalMatrix rows_matrix(const std::vector<RationalVector>& rows, std::size_t n) {
  RationalMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

// Vertices of sum [-g, g] over nonzero generators. Facets correspond to the
// normals w inside span(G) orthogonal to r - 1 independent generators; every
// vertex lies on one, so the vertex set is the union over w of
// +-sum_{g.w != 0} sign(g.w) g plus the vertices of the zonotope of
// {g.w = 0}. Sub-zonotopes are shared between faces and memoized.
class ZonotopeVertices {
 public:
  ZonotopeVertices(std::vector<RationalVector> gens, std::size_t n) : gens_(std::move(gens)), n_(n) {}

  const std::vector<RationalVector>& of(const std::vector<std::size_t>& ids) {
    if (auto it = memo_.find(ids); it != memo_.end()) return it->second;
    std::set<RationalVector> out;
    if (ids.empty()) out.insert(zero_vector(n_));
    for (const auto& w : facet_normals(ids)) {
      RationalVector c = zero_vector(n_);
      std::vector<std::size_t> rest;
      for (std::size_t i : ids) {
        const Rational t = dot(gens_[i], w);
        if (t > 0) c = add(c, gens_[i]);
        else if (t < 0) c = sub(c, gens_[i]);
        else rest.push_back(i);
      }
      const std::vector<RationalVector> sub_vertices = of(rest);
      const RationalVector minus_c = scaled(c, Rational(-1));
      for (const auto& v : sub_vertices) {
        out.insert(add(c, v));
        out.insert(add(minus_c, v));
      }
    }
    return memo_.emplace(ids, std::vector<RationalVector>(out.begin(), out.end())).first->second;
  }

 private:
  std::set<RationalVector> facet_normals(const std::vector<std::size_t>& ids) const {
    std::set<RationalVector> normals;
    if (ids.empty()) return normals;
    std::vector<RationalVector> basis;
    for (std::size_t i : ids) {
      basis.push_back(gens_[i]);
      if (rank(rows_matrix(basis, n_)) < basis.size()) basis.pop_back();
      if (basis.size() == n_) break;
    }
    const std::size_t r = basis.size();
    if (r == 1) {
      normals.insert(basis.front());
      return normals;
    }
    std::vector<std::size_t> idx(r - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (;;) {
      RationalVector w;
      if (r == n_) {
        std::vector<RationalVector> rows;
        for (std::size_t i : idx) rows.push_back(gens_[ids[i]]);
        w = cross(rows);
      } else {
        RationalMatrix m(r - 1, r);
        for (std::size_t i = 0; i + 1 < r; ++i)
          for (std::size_t j = 0; j < r; ++j) m(i, j) = dot(gens_[ids[idx[i]]], basis[j]);
        const std::vector<RationalVector> ker = nullspace(m);
        if (ker.size() == 1) {
          w = zero_vector(n_);
          for (std::size_t j = 0; j < r; ++j) w = add(w, scaled(basis[j], ker[0][j]));
        }
      }
      if (!w.empty() && !is_zero(w)) {
        w = primitive(w);
        for (const auto& x : w)
          if (x != 0) {
            if (x < 0) w = scaled(w, Rational(-1));
            break;
          }
        normals.insert(std::move(w));
      }
      std::size_t i = idx.size();
      while (i > 0 && idx[i - 1] == ids.size() - idx.size() + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return normals;
  }

  std::vector<RationalVector> gens_;
  std::size_t n_;
  std::map<std::vector<std::size_t>, std::vector<RationalVector>> memo_;
};

}  // namespace

Polytope zonotope(const std::vector<RationalVector>& generators, std::size_t n) {
  std::vector<RationalVector> gens;
  for (const auto& g : generators) {
    if (g.size() != n) throw DimensionError("zonotope: generator length mismatch");
    if (!is_zero(g)) gens.push_back(g);
  }
  std::vector<std::size_t> ids(gens.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  ZonotopeVertices z(std::move(gens), n);
  return Polytope::from_extreme_points(z.of(ids));
}

Polytope projection_body(const Polytope& p) { return zonotope(projection_generators(p), p.ambient_dim()); }

Polytope rotate90(const Polytope& p) {
  if (p.ambient_dim() != 2) throw DimensionError("rotate90: ambient dimension must be 2");
  std::vector<RationalVector> pts;
  for (const auto& v : p.vertices()) pts.push_back({-v[1], v[0]});
  return Polytope::from_extreme_points(std::move(pts));
}

Polytope contra_z_ab_2d(const Polytope& p, const Rational& a, const Rational& b) {
  if (p.ambient_dim() != 2) throw DimensionError("contra_z_ab_2d: ambient dimension must be 2");
  return rotate90(z_ab(p, a, b));
}

Polytope evaluate(const OperatorSpec& op, const Polytope& p) {
  op.validate(p.ambient_dim());
  switch (op.kind) {
    case OperatorKind::difference_scaled:
      return scale(difference_body(p), op.c);
    case OperatorKind::z_ab:
      return z_ab(p, op.a, op.b);
    case OperatorKind::projection_scaled:
      return scale(projection_body(p), op.c);
    case OperatorKind::rot_z_ab_2d:
      return contra_z_ab_2d(p, op.a, op.b);
    case OperatorKind::zero:
      return origin(p.ambient_dim());
    case OperatorKind::z_ab_centroid_control:
      if (op.a == 0 && op.b == 0) return origin(p.ambient_dim());
      return shifted_pair(p, op.a, op.b, centroid(p));
    case OperatorKind::projection_flipped_control:
      return flipped_projection(p);
  }
  throw InputError("evaluate: unknown operator kind");
}

Polytope evaluate(const OperatorSpec& op, const std::optional<Polytope>& p, std::size_t n) {
  return p ? evaluate(op, *p) : origin(n);
}

Polytope centered_cube(std::size_t n, const Rational& c) {
  if (c == 0) return origin(n);
  const Polytope cube = Polytope::unit_cube(n);
  RationalVector half(n, Rational(1, 2));
  return scale(translate(cube, scaled(half, Rational(-1))), 2 * c);
}

HomogeneousPart homogeneous_part(const OperatorSpec& op, const Polytope& p, std::span<const Rational> v,
                                 std::size_t kmax) {
  const std::size_t n = p.ambient_dim();
  if (kmax < n + 1) throw InputError("homogeneous_part: need kmax >= n + 1");
  auto sample = [&](std::size_t k) { return support(evaluate(op, scale(p, Rational(static_cast<long>(k)))), v); };
  std::vector<std::pair<Integer, Rational>> samples;
  for (std::size_t k = 1; k <= n + 1; ++k) samples.emplace_back(Integer(static_cast<long>(k)), sample(k));
  HomogeneousPart part{lagrange_interpolate(samples), Rational(0)};
  part.leading = part.polynomial.coefficient(n);
  for (std::size_t k = n + 2; k <= kmax; ++k)
    if (part.polynomial(Rational(static_cast<long>(k))) != sample(k))
      throw ConsistencyError("homogeneous_part: support values are not polynomial of degree <= n");
  return part;
}

}  // namespace latval
