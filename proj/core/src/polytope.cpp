#include "latval/polytope.hpp"

#include "combinations.hpp"
#include "hull.hpp"
#include "latval/face_lattice.hpp"
#include "latval/lp.hpp"

#include <algorithm>
#include <set>

namespace latval {

namespace {

void check_lengths(const std::vector<RationalVector>& points) {
  const std::size_t n = points.front().size();
  if (n == 0) throw DimensionError("points must have at least one coordinate");
  for (const auto& p : points)
    if (p.size() != n) throw DimensionError("points have inconsistent lengths");
}

void sort_unique(std::vector<RationalVector>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

RationalVector canonical_sign(RationalVector a) {
  for (const auto& x : a) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : a) y = -y;
    break;
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polytope

Polytope Polytope::hull(std::vector<RationalVector> points) { return canonicalize(std::move(points)); }

Polytope Polytope::hull(const std::vector<IntVector>& points) {
  std::vector<RationalVector> r;
  r.reserve(points.size());
  for (const auto& p : points) r.push_back(to_rational(p));
  return canonicalize(std::move(r));
}

Polytope Polytope::from_extreme_points(std::vector<RationalVector> points) {
  if (points.empty()) throw InputError("polytope needs at least one point");
  check_lengths(points);
  sort_unique(points);
  const std::size_t n = points.front().size();
  return Polytope(n, std::move(points));
}

Polytope Polytope::point(RationalVector x) { return from_extreme_points({std::move(x)}); }

Polytope Polytope::standard_simplex(std::size_t n, std::size_t d) {
  if (d > n) throw DimensionError("standard_simplex: d > n");
  std::vector<RationalVector> pts{zero_vector(n)};
  for (std::size_t i = 0; i < d; ++i) pts.push_back(unit_vector(n, i));
  return from_extreme_points(std::move(pts));
}

Polytope Polytope::unit_cube(std::size_t n, std::size_t d) {
  if (d > n) throw DimensionError("unit_cube: d > n");
  std::vector<RationalVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    RationalVector x = zero_vector(n);
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (std::size_t{1} << i)) x[i] = 1;
    pts.push_back(std::move(x));
  }
  return from_extreme_points(std::move(pts));
}

bool Polytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RationalVector& v) { return is_integral(v); });
}

// ---------------------------------------------------------------------------
// HalfspaceSystem

bool HalfspaceSystem::contains(std::span<const Rational> x) const {
  for (const auto& h : equations)
    if (dot(h.normal, x) != h.offset) return false;
  for (const auto& h : inequalities)
    if (dot(h.normal, x) > h.offset) return false;
  return true;
}

bool HalfspaceSystem::contains_in_relative_interior(std::span<const Rational> x) const {
  for (const auto& h : equations)
    if (dot(h.normal, x) != h.offset) return false;
  for (const auto& h : inequalities)
    if (dot(h.normal, x) >= h.offset) return false;
  return true;
}

HalfspaceSystem combine(const HalfspaceSystem& a, const HalfspaceSystem& b) {
  if (a.ambient_dim != b.ambient_dim) throw DimensionError("combine: ambient dimension mismatch");
  std::set<Halfspace> ineq(a.inequalities.begin(), a.inequalities.end());
  ineq.insert(b.inequalities.begin(), b.inequalities.end());
  std::set<Halfspace> eq(a.equations.begin(), a.equations.end());
  eq.insert(b.equations.begin(), b.equations.end());
  return {a.ambient_dim, {ineq.begin(), ineq.end()}, {eq.begin(), eq.end()}};
}

// ---------------------------------------------------------------------------
// Canonicalization

Polytope canonicalize(std::vector<RationalVector> points) {
  if (points.empty()) throw InputError("canonicalize: empty point list");
  check_lengths(points);
  sort_unique(points);
  const std::size_t count = points.size();
  if (count <= 2) return Polytope::from_extreme_points(std::move(points));
  const detail::HullResult hull = detail::convex_hull(points);
  std::vector<RationalVector> kept;
  kept.reserve(hull.extreme.size());
  for (auto i : hull.extreme) kept.push_back(std::move(points[i]));
  return Polytope::from_extreme_points(std::move(kept));
}

// ---------------------------------------------------------------------------
// Basic operations

Rational support(const Polytope& p, std::span<const Rational> v) {
  if (v.size() != p.ambient_dim()) throw DimensionError("support: direction length mismatch");
  Rational best = dot(v, p.vertices().front());
  for (const auto& x : p.vertices()) best = std::max(best, dot(v, x));
  return best;
}

Polytope face(const Polytope& p, std::span<const Rational> v) {
  if (is_zero(v)) throw InputError("face: direction must be nonzero");
  const Rational h = support(p, v);
  std::vector<RationalVector> pts;
  for (const auto& x : p.vertices())
    if (dot(v, x) == h) pts.push_back(x);
  return Polytope::from_extreme_points(std::move(pts));
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionError("minkowski_sum: ambient dimension mismatch");
  if (q.size() == 1) return translate(p, q.vertices().front());
  if (p.size() == 1) return translate(q, p.vertices().front());
  std::vector<RationalVector> sums;
  sums.reserve(p.size() * q.size());
  for (const auto& x : p.vertices())
    for (const auto& y : q.vertices()) sums.push_back(add(x, y));
  return canonicalize(std::move(sums));
}

Polytope scale(const Polytope& p, const Rational& t) {
  if (t == 0) return Polytope::point(zero_vector(p.ambient_dim()));
  std::vector<RationalVector> pts;
  pts.reserve(p.size());
  for (const auto& x : p.vertices()) pts.push_back(scaled(x, t));
  return Polytope::from_extreme_points(std::move(pts));
}

Polytope translate(const Polytope& p, std::span<const Rational> z) {
  if (z.size() != p.ambient_dim()) throw DimensionError("translate: vector length mismatch");
  std::vector<RationalVector> pts;
  pts.reserve(p.size());
  for (const auto& x : p.vertices()) pts.push_back(add(x, z));
  return Polytope::from_extreme_points(std::move(pts));
}

Polytope negate(const Polytope& p) { return scale(p, Rational(-1)); }

Polytope apply_map(const Polytope& p, const UnimodularMap& phi) {
  if (phi.dim() != p.ambient_dim()) throw DimensionError("apply_map: dimension mismatch");
  std::vector<RationalVector> pts;
  pts.reserve(p.size());
  for (const auto& x : p.vertices()) pts.push_back(phi.apply(x));
  return Polytope::from_extreme_points(std::move(pts));
}

AffineBasis affine_basis(const Polytope& p) {
  AffineBasis basis{p.vertices().front(), {}};
  const std::size_t n = p.ambient_dim();
  for (std::size_t i = 1; i < p.size() && basis.edges.size() < n; ++i) {
    RationalVector e = sub(p.vertices()[i], basis.base);
    RationalMatrix m(basis.edges.size() + 1, n);
    for (std::size_t r = 0; r < basis.edges.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = basis.edges[r][c];
    for (std::size_t c = 0; c < n; ++c) m(basis.edges.size(), c) = e[c];
    if (rank(m) == basis.edges.size() + 1) basis.edges.push_back(std::move(e));
  }
  return basis;
}

std::size_t dim(const Polytope& p) { return affine_rank(p.vertices()); }

RationalVector vertex_average(const Polytope& p) {
  RationalVector s = zero_vector(p.ambient_dim());
  for (const auto& x : p.vertices()) s = add(s, x);
  return scaled(s, Rational(1, static_cast<long>(p.size())));
}

bool equal(const Polytope& p, const Polytope& q) { return p == q; }

// ---------------------------------------------------------------------------
// Dual descriptions

HalfspaceSystem facet_system(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  const AffineBasis basis = affine_basis(p);
  const std::size_t d = basis.edges.size();
  HalfspaceSystem h{n, {}, {}};

  RationalMatrix edges(d, n);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < n; ++c) edges(r, c) = basis.edges[r][c];
  if (d < n) {
    for (auto& a : nullspace(edges)) {
      a = canonical_sign(std::move(a));
      Rational b = dot(a, basis.base);
      h.equations.push_back({std::move(a), std::move(b)});
    }
    std::sort(h.equations.begin(), h.equations.end());
  }
  if (d == 0) return h;
  if (d == n) {
    h.inequalities = detail::convex_hull(p.vertices()).facets;
    return h;
  }

  const auto& verts = p.vertices();
  std::set<Halfspace> found;
  detail::for_each_combination(verts.size(), d, [&](const std::vector<std::size_t>& s) {
    // Normal a = edges^T c inside the hull's direction space, orthogonal to
    // the differences of the chosen vertices.
    RationalMatrix diff(d - 1, n);
    for (std::size_t r = 1; r < d; ++r)
      for (std::size_t c = 0; c < n; ++c) diff(r - 1, c) = verts[s[r]][c] - verts[s[0]][c];
    const RationalMatrix m = diff * edges.transpose();
    const auto null = nullspace(m);
    if (null.size() != 1) return true;
    RationalVector a = multiply(edges.transpose(), null.front());
    a = primitive(a);
    const Rational b = dot(a, verts[s[0]]);
    bool any_below = false;
    bool any_above = false;
    for (const auto& v : verts) {
      const Rational x = dot(a, v);
      any_below = any_below || x < b;
      any_above = any_above || x > b;
      if (any_below && any_above) return true;
    }
    if (any_above) {
      for (auto& x : a) x = -x;
      found.insert({std::move(a), -b});
    } else {
      found.insert({std::move(a), b});
    }
    return true;
  });
  h.inequalities.assign(found.begin(), found.end());
  return h;
}

namespace {

RationalMatrix rows_of(const std::vector<Halfspace>& hs, std::size_t n) {
  RationalMatrix m(hs.size(), n);
  for (std::size_t r = 0; r < hs.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = hs[r].normal[c];
  return m;
}

RationalVector offsets_of(const std::vector<Halfspace>& hs) {
  RationalVector b;
  b.reserve(hs.size());
  for (const auto& h : hs) b.push_back(h.offset);
  return b;
}

bool has_nonzero_recession(const HalfspaceSystem& h) {
  const std::size_t n = h.ambient_dim;
  const RationalMatrix a_le = rows_of(h.inequalities, n);
  const RationalVector zeros_le(h.inequalities.size(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (int s : {1, -1}) {
      // d in the recession cone with d_j = s.
      std::vector<Halfspace> eqs;
      for (const auto& e : h.equations) eqs.push_back({e.normal, Rational(0)});
      eqs.push_back({unit_vector(n, j), Rational(s)});
      if (has_solution(a_le, zeros_le, rows_of(eqs, n), offsets_of(eqs))) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Polytope> vertex_enumeration(const HalfspaceSystem& h) {
  const std::size_t n = h.ambient_dim;
  std::vector<Halfspace> eqs;
  for (const auto& e : h.equations) {
    eqs.push_back(e);
    if (rank(rows_of(eqs, n)) < eqs.size()) eqs.pop_back();
  }
  const std::size_t need = n - eqs.size();

  std::vector<RationalVector> candidates;
  detail::for_each_combination(h.inequalities.size(), need, [&](const std::vector<std::size_t>& s) {
    RationalMatrix m(n, n);
    RationalVector b(n);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = eqs[r].normal[c];
      b[r] = eqs[r].offset;
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto& hs = h.inequalities[s[k]];
      for (std::size_t c = 0; c < n; ++c) m(eqs.size() + k, c) = hs.normal[c];
      b[eqs.size() + k] = hs.offset;
    }
    auto x = solve_linear(m, b);
    if (x && h.contains(*x)) candidates.push_back(std::move(*x));
    return true;
  });

  if (candidates.empty()) {
    const bool feasible = has_solution(rows_of(h.inequalities, n), offsets_of(h.inequalities),
                                       rows_of(h.equations, n), offsets_of(h.equations));
    if (feasible) throw UnboundedError("vertex_enumeration: system is feasible but has no vertex");
    return std::nullopt;
  }
  if (has_nonzero_recession(h)) throw UnboundedError("vertex_enumeration: system is unbounded");
  return Polytope::from_extreme_points(std::move(candidates));
}

std::optional<Polytope> intersect(const Polytope& p, const Polytope& q) {
  const std::size_t n = p.ambient_dim();
  if (q.ambient_dim() != n) throw DimensionError("intersect: ambient dimension mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    const RationalVector e = unit_vector(n, c);
    if (support(p, e) < -support(q, scaled(e, Rational(-1))) ||
        support(q, e) < -support(p, scaled(e, Rational(-1))))
      return std::nullopt;
  }
  return vertex_enumeration(combine(facet_system(p), facet_system(q)));
}

// ---------------------------------------------------------------------------
// Measures

Rational volume(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  if (dim(p) < n) return Rational(0);
  const FaceLattice lattice(p);
  Rational total(0);
  for (const auto& simplex : lattice.triangulate()) {
    RationalMatrix m(n, n);
    const auto& v0 = p.vertices()[simplex[0]];
    for (std::size_t r = 1; r <= n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = p.vertices()[simplex[r]][c] - v0[c];
    total += abs(det(m));
  }
  return total / Rational(factorial(static_cast<unsigned>(n)));
}

RationalVector centroid(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  const AffineBasis basis = affine_basis(p);
  const std::size_t d = basis.edges.size();
  if (d == 0) return p.vertices().front();

  // d coordinates on which the affine hull projects bijectively; volumes in
  // the hull are proportional to volumes of the projection.
  std::vector<std::size_t> coords;
  for (std::size_t c = 0; c < n && coords.size() < d; ++c) {
    RationalMatrix m(d, coords.size() + 1);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < coords.size(); ++k) m(r, k) = basis.edges[r][coords[k]];
      m(r, coords.size()) = basis.edges[r][c];
    }
    if (rank(m) == coords.size() + 1) coords.push_back(c);
  }

  const FaceLattice lattice(p);
  RationalVector moment = zero_vector(n);
  Rational weight_sum(0);
  for (const auto& simplex : lattice.triangulate()) {
    const auto& v0 = p.vertices()[simplex[0]];
    RationalMatrix m(d, d);
    RationalVector sum = zero_vector(n);
    for (auto idx : simplex) sum = add(sum, p.vertices()[idx]);
    for (std::size_t r = 1; r <= d; ++r)
      for (std::size_t k = 0; k < d; ++k) m(r - 1, k) = p.vertices()[simplex[r]][coords[k]] - v0[coords[k]];
    const Rational w = abs(det(m));
    moment = add(moment, scaled(sum, w / Rational(static_cast<long>(d + 1))));
    weight_sum += w;
  }
  return scaled(moment, 1 / weight_sum);
}

namespace {

RationalVector simplex_cross(const Polytope& p, const std::vector<std::size_t>& simplex) {
  std::vector<RationalVector> edges;
  for (std::size_t r = 1; r < simplex.size(); ++r)
    edges.push_back(sub(p.vertices()[simplex[r]], p.vertices()[simplex[0]]));
  return cross(edges);
}

}  // namespace

std::vector<RationalVector> facet_area_vectors(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  if (dim(p) != n) throw InputError("facet_area_vectors: polytope is not full-dimensional");
  const FaceLattice lattice(p);
  const HalfspaceSystem h = facet_system(p);
  const Rational norm = Rational(factorial(static_cast<unsigned>(n - 1)));
  std::vector<RationalVector> out;
  for (const auto& facet : h.inequalities) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (dot(facet.normal, p.vertices()[i]) == facet.offset) tight.push_back(i);
    const std::size_t f = lattice.find(tight);
    if (f == lattice.size()) throw ConsistencyError("facet_area_vectors: facet missing from face lattice");
    RationalVector z = zero_vector(n);
    for (const auto& simplex : lattice.triangulate(f)) {
      RationalVector c = simplex_cross(p, simplex);
      if (dot(c, facet.normal) < 0) c = scaled(c, Rational(-1));
      z = add(z, c);
    }
    out.push_back(scaled(z, 1 / norm));
  }
  return out;
}

RationalVector hyperplane_area_vector(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  if (n < 2 || dim(p) != n - 1) throw InputError("hyperplane_area_vector: need dim P = n - 1");
  const HalfspaceSystem h = facet_system(p);
  const RationalVector& normal = h.equations.front().normal;
  const FaceLattice lattice(p);
  RationalVector z = zero_vector(n);
  for (const auto& simplex : lattice.triangulate()) {
    RationalVector c = simplex_cross(p, simplex);
    if (dot(c, normal) < 0) c = scaled(c, Rational(-1));
    z = add(z, c);
  }
  return canonical_sign(scaled(z, 1 / Rational(factorial(static_cast<unsigned>(n - 1)))));
}

bool is_basic_simplex(const Polytope& s) {
  if (!s.is_lattice()) return false;
  const std::size_t d = dim(s);
  if (s.size() != d + 1) return false;
  if (d == 0) return true;
  const std::size_t n = s.ambient_dim();
  Integer g(0);
  detail::for_each_combination(n, d, [&](const std::vector<std::size_t>& cols) {
    IntMatrix m(d, d);
    for (std::size_t r = 1; r <= d; ++r)
      for (std::size_t k = 0; k < d; ++k)
        m(r - 1, k) = numerator(s.vertices()[r][cols[k]] - s.vertices()[0][cols[k]]);
    g = gcd(g, det(m));
    return g != 1;
  });
  return g == 1;
}

bool is_centrally_symmetric(const Polytope& p) {
  const RationalVector two_c = add(p.vertices().front(), p.vertices().back());
  std::vector<RationalVector> reflected;
  for (const auto& v : p.vertices()) reflected.push_back(sub(two_c, v));
  return Polytope::from_extreme_points(std::move(reflected)) == p;
}

}  // namespace latval
