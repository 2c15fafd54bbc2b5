#include "latval/decompositions.hpp"

#include "combinations.hpp"
#include "latval/ehrhart.hpp"
#include "latval/face_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace latval {

namespace {

RationalVector point_of(std::size_t n, std::initializer_list<std::size_t> ones, std::size_t extra_axis = SIZE_MAX,
                        long extra = 0) {
  RationalVector x = zero_vector(n);
  for (auto i : ones) x[i] += 1;
  if (extra_axis != SIZE_MAX) x[extra_axis] += extra;
  return x;
}

}  // namespace

std::map<std::size_t, std::size_t> CellDecomposition::interior_census() const {
  std::map<std::size_t, std::size_t> census;
  for (std::size_t m = 0; m <= target.ambient_dim(); ++m) census[m] = 0;
  for (const auto& f : faces)
    if (f.meets_interior) ++census[f.dim];
  return census;
}

std::map<RationalVector, std::size_t> CellDecomposition::interior_facet_normals() const {
  std::map<RationalVector, std::size_t> normals;
  const std::size_t n = target.ambient_dim();
  for (const auto& f : faces) {
    if (!f.meets_interior || f.dim + 1 != n) continue;
    ++normals[facet_system(f.polytope).equations.front().normal];
  }
  return normals;
}

std::vector<std::pair<std::size_t, std::size_t>> CellDecomposition::adjacency() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = target.ambient_dim();
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const auto meet = intersect(cells[i], cells[j]);
      if (meet && dim(*meet) + 1 == n) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::string> CellDecomposition::validate() const {
  std::vector<std::string> problems;
  const HalfspaceSystem outer = facet_system(target);
  Rational total(0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (dim(cells[i]) != target.ambient_dim()) problems.push_back("cell " + std::to_string(i) + " is not full-dimensional");
    for (const auto& v : cells[i].vertices())
      if (!outer.contains(v)) problems.push_back("cell " + std::to_string(i) + " leaves the target");
    total += volume(cells[i]);
  }
  if (total != volume(target))
    problems.push_back("cell volumes sum to " + to_string(total) + ", target volume is " + to_string(volume(target)));

  std::vector<HalfspaceSystem> systems;
  std::vector<std::set<Polytope>> cell_faces;
  for (const auto& cell : cells) {
    systems.push_back(facet_system(cell));
    const FaceLattice lattice(cell);
    cell_faces.emplace_back();
    for (std::size_t f = 0; f < lattice.size(); ++f) cell_faces.back().insert(lattice.face_polytope(f));
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const auto meet = vertex_enumeration(combine(systems[i], systems[j]));
      if (!meet) continue;
      if (!cell_faces[i].count(*meet) || !cell_faces[j].count(*meet))
        problems.push_back("cells " + std::to_string(i) + " and " + std::to_string(j) + " do not meet in a common face");
    }

  for (const auto& f : faces) {
    const RationalVector w = vertex_average(f.polytope);
    bool on_boundary = false;
    for (const auto& h : outer.inequalities) on_boundary = on_boundary || dot(h.normal, w) == h.offset;
    if (f.meets_interior == on_boundary) problems.push_back("interior flag disagrees with witness point");
  }
  return problems;
}

CellDecomposition make_decomposition(std::string name, Polytope target, std::vector<Polytope> cells) {
  const HalfspaceSystem outer = facet_system(target);
  std::map<Polytope, DecompositionFace> unique;
  for (const auto& cell : cells) {
    const FaceLattice lattice(cell);
    for (std::size_t f = 0; f < lattice.size(); ++f) {
      Polytope face = lattice.face_polytope(f);
      if (unique.count(face)) continue;
      const bool inside = outer.contains_in_relative_interior(vertex_average(face));
      unique.emplace(face, DecompositionFace{face, lattice.face_dim(f), inside});
    }
  }
  CellDecomposition d{std::move(name), std::move(target), std::move(cells), {}};
  for (auto& [key, face] : unique) d.faces.push_back(std::move(face));
  std::stable_sort(d.faces.begin(), d.faces.end(),
                   [](const DecompositionFace& a, const DecompositionFace& b) { return a.dim < b.dim; });
  return d;
}

ValuationQuadruple make_quadruple(std::string label, const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionError("make_quadruple: ambient dimension mismatch");
  std::vector<RationalVector> pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  Polytope u = canonicalize(std::move(pts));
  auto i = intersect(p, q);
  if (dim(u) != u.ambient_dim()) throw InputError("quadruple '" + label + "' rejected: union hull is not full-dimensional");
  const Rational lhs = volume(p) + volume(q);
  const Rational rhs = volume(u) + (i ? volume(*i) : Rational(0));
  if (lhs != rhs)
    throw InputError("quadruple '" + label + "' rejected: vol P + vol Q = " + to_string(lhs) +
                     " but vol U + vol I = " + to_string(rhs) + " (P ∪ Q is not convex)");
  return {std::move(label), p, q, std::move(u), std::move(i)};
}

ValuationQuadruple corner_split(std::size_t n) {
  if (n < 2) throw InputError("corner_split: need n >= 2");
  const Polytope cube = Polytope::unit_cube(n);
  std::vector<RationalVector> rest(cube.vertices().begin() + 1, cube.vertices().end());  // drop o
  return make_quadruple("corner_split", Polytope::standard_simplex(n), Polytope::from_extreme_points(std::move(rest)));
}

CellDecomposition prism_triangulation(std::size_t n) {
  if (n < 2) throw InputError("prism_triangulation: need n >= 2");
  // e_0 = o; e_j for j >= 1 is the j-th coordinate vector (index j - 1).
  auto e = [n](std::size_t j) { return j == 0 ? zero_vector(n) : unit_vector(n, j - 1); };
  const RationalVector en = e(n);
  std::vector<Polytope> cells{Polytope::standard_simplex(n)};
  for (std::size_t i = 2; i <= n; ++i) {
    std::vector<RationalVector> pts;
    for (std::size_t j = 0; j < i; ++j) pts.push_back(add(e(j), en));
    for (std::size_t j = i - 1; j <= n - 1; ++j) pts.push_back(e(j));
    cells.push_back(Polytope::from_extreme_points(std::move(pts)));
  }
  Polytope prism = minkowski_sum(Polytope::standard_simplex(n, n - 1), Polytope::from_extreme_points({zero_vector(n), en}));
  return make_decomposition("prism", std::move(prism), std::move(cells));
}

CellDecomposition cube_triangulation(std::size_t n) {
  if (n < 2) throw InputError("cube_triangulation: need n >= 2");
  std::vector<RationalVector> pts = Polytope::unit_cube(n).vertices();
  // By coordinate sum, ties lexicographically decreasing, so the first n + 1
  // points are o, e_1, ..., e_n.
  std::stable_sort(pts.begin(), pts.end(), [](const RationalVector& a, const RationalVector& b) {
    const Rational sa = std::accumulate(a.begin(), a.end(), Rational(0));
    const Rational sb = std::accumulate(b.begin(), b.end(), Rational(0));
    return sa < sb || (sa == sb && a > b);
  });

  // Placing triangulation: each new point is coned over the boundary facets
  // of the current hull that it sees strictly.
  std::vector<std::vector<std::size_t>> simplices;
  simplices.emplace_back(n + 1);
  std::iota(simplices.back().begin(), simplices.back().end(), 0);
  for (std::size_t p = n + 1; p < pts.size(); ++p) {
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> ridge_count;  // facet -> (count, opposite)
    for (const auto& s : simplices)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> facet;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) facet.push_back(s[k]);
        auto& entry = ridge_count[facet];
        ++entry.first;
        entry.second = s[drop];
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [facet, entry] : ridge_count) {
      if (entry.first != 1) continue;
      std::vector<RationalVector> edges;
      for (std::size_t k = 1; k < facet.size(); ++k) edges.push_back(sub(pts[facet[k]], pts[facet[0]]));
      const RationalVector normal = cross(edges);
      const Rational inner = dot(normal, sub(pts[entry.second], pts[facet[0]]));
      const Rational outer = dot(normal, sub(pts[p], pts[facet[0]]));
      if (outer != 0 && (outer > 0) != (inner > 0)) {
        auto s = facet;
        s.push_back(p);
        std::sort(s.begin(), s.end());
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }

  std::vector<Polytope> cells;
  for (const auto& s : simplices) {
    std::vector<RationalVector> v;
    for (auto i : s) v.push_back(pts[i]);
    cells.push_back(Polytope::from_extreme_points(std::move(v)));
  }
  return make_decomposition("cube", Polytope::unit_cube(n), std::move(cells));
}

CellDecomposition grid_decomposition(std::size_t n, std::size_t k) {
  if (k < 1) throw InputError("grid_decomposition: need k >= 1");
  if (n < 1) throw InputError("grid_decomposition: need n >= 1");
  const Polytope unit = Polytope::unit_cube(n);
  std::vector<Polytope> cells;
  std::vector<std::size_t> offset(n, 0);
  for (;;) {
    RationalVector z;
    for (auto o : offset) z.emplace_back(static_cast<long>(o));
    cells.push_back(translate(unit, z));
    std::size_t i = n;
    while (i > 0 && offset[i - 1] + 1 == k) offset[--i] = 0;
    if (i == 0) break;
    ++offset[i - 1];
  }
  return make_decomposition("grid", scale(unit, Rational(static_cast<long>(k))), std::move(cells));
}

RationalVector valuation_value(ScalarValuation which, const Polytope& p) {
  switch (which) {
    case ScalarValuation::count:
      return {Rational(count(p))};
    case ScalarValuation::volume:
      return {volume(p)};
    case ScalarValuation::moment:
      return to_rational(discrete_moment(p));
  }
  throw InputError("valuation_value: unknown valuation");
}

RationalVector inclusion_exclusion_sum(const CellDecomposition& d, ScalarValuation which) {
  const std::size_t n = d.target.ambient_dim();
  RationalVector total = zero_vector(which == ScalarValuation::moment ? n : 1);
  for (const auto& f : d.faces) {
    if (!f.meets_interior) continue;
    RationalVector v = valuation_value(which, f.polytope);
    if ((n - f.dim) % 2 == 1) v = scaled(v, Rational(-1));
    total = add(total, v);
  }
  return total;
}

bool inclusion_exclusion_check(const CellDecomposition& d, ScalarValuation which) {
  return inclusion_exclusion_sum(d, which) == valuation_value(which, d.target);
}

std::vector<ValuationQuadruple> quadruples_library(std::size_t n) {
  if (n < 2 || n > 4) throw InputError("quadruples_library: n must be 2, 3 or 4");
  std::vector<ValuationQuadruple> out;
  out.push_back(corner_split(n));

  const CellDecomposition prism = prism_triangulation(n);
  for (std::size_t i = 0; i + 1 < prism.cells.size(); ++i)
    out.push_back(make_quadruple("prism_cells_" + std::to_string(i + 1) + "_" + std::to_string(i + 2),
                                 prism.cells[i], prism.cells[i + 1]));

  const Polytope cube = Polytope::unit_cube(n);
  out.push_back(make_quadruple("adjacent_cubes", cube, translate(cube, unit_vector(n, 0))));

  {  // the cube cut by the hyperplane x_1 = x_2
    std::vector<RationalVector> upper;
    std::vector<RationalVector> lower;
    for (const auto& v : cube.vertices()) {
      if (v[0] >= v[1]) upper.push_back(v);
      if (v[0] <= v[1]) lower.push_back(v);
    }
    out.push_back(make_quadruple("cube_diagonal_cut", Polytope::from_extreme_points(std::move(upper)),
                                 Polytope::from_extreme_points(std::move(lower))));
  }

  {  // a pyramid with apex 2 e_n on the top facet of the cube
    std::vector<RationalVector> top;
    for (const auto& v : cube.vertices())
      if (v[n - 1] == 1) top.push_back(v);
    top.push_back(scaled(unit_vector(n, n - 1), Rational(2)));
    out.push_back(make_quadruple("cube_with_pyramid", cube, Polytope::from_extreme_points(std::move(top))));
  }

  {  // a wedge glued to the facet x_1 = 1, sloping down to x_1 = 2
    std::vector<RationalVector> wedge;
    for (const auto& v : cube.vertices()) {
      if (v[0] != 1) continue;
      wedge.push_back(v);
      if (v[n - 1] == 0) wedge.push_back(add(v, unit_vector(n, 0)));
    }
    out.push_back(make_quadruple("cube_with_wedge", cube, Polytope::from_extreme_points(std::move(wedge))));
  }

  if (n == 2) {
    out.push_back(make_quadruple("planar_dissection", Polytope::standard_simplex(2),
                                 Polytope::from_extreme_points({point_of(2, {0}), point_of(2, {1}), point_of(2, {0, 1})})));
    auto pt = [](long x, long y) { return RationalVector{Rational(x), Rational(y)}; };
    out.push_back(make_quadruple("trapezoid", cube, Polytope::from_extreme_points({pt(1, 0), pt(2, 0), pt(1, 1)})));
    out.push_back(make_quadruple("pentagon_chord", Polytope::from_extreme_points({pt(0, 0), pt(3, 0), pt(3, 2)}),
                                 Polytope::from_extreme_points({pt(0, 0), pt(3, 2), pt(1, 3), pt(0, 2)})));
  }
  if (n == 3) {
    auto pt = [](long x, long y, long z) { return RationalVector{Rational(x), Rational(y), Rational(z)}; };
    // Octahedron-like body split by the plane z = 0.
    out.push_back(make_quadruple(
        "split_bipyramid",
        Polytope::from_extreme_points({pt(0, 0, 0), pt(2, 0, 0), pt(2, 1, 0), pt(0, 1, 0), pt(1, 1, 2)}),
        Polytope::from_extreme_points({pt(0, 0, 0), pt(2, 0, 0), pt(2, 1, 0), pt(0, 1, 0), pt(1, 0, -1)})));
  }
  return out;
}

}  // namespace latval
