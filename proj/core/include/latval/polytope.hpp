#pragma once

// V-representation polytopes over Q^n.
//
// A Polytope is always canonical: its vertex list holds exactly the extreme
// points, deduplicated and sorted lexicographically, so equality of polytopes
// is equality of vertex lists. Lattice polytopes are the ones whose vertices
// are all integral. The empty set is not a Polytope; functions that can
// produce it return std::optional<Polytope>.
//
// Facets of full-dimensional polytopes come out of the hull computation.
// Facets of lower-dimensional ones and vertex enumeration are brute-force
// subset searches (C(#vertices, dim) candidate hyperplanes, C(#inequalities, n)
// candidate vertices), fine for n <= 4 and a few dozen vertices.

#include "latval/exact.hpp"
#include "latval/unimodular.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace latval {

class UnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Polytope {
 public:
  /// Convex hull of a nonempty point list (see canonicalize).
  static Polytope hull(std::vector<RationalVector> points);
  static Polytope hull(const std::vector<IntVector>& points);

  /// Wraps a list that is already known to consist of extreme points only
  /// (images of a canonical polytope under an affine bijection, subsets of
  /// vertices on a face). Sorts and deduplicates but skips the extremality
  /// test.
  static Polytope from_extreme_points(std::vector<RationalVector> points);

  static Polytope point(RationalVector x);
  /// T_d = [o, e_1, ..., e_d] inside Z^n.
  static Polytope standard_simplex(std::size_t n, std::size_t d);
  static Polytope standard_simplex(std::size_t n) { return standard_simplex(n, n); }
  /// [0,1]^d inside Z^n.
  static Polytope unit_cube(std::size_t n, std::size_t d);
  static Polytope unit_cube(std::size_t n) { return unit_cube(n, n); }

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool is_lattice() const;

  friend bool operator==(const Polytope& a, const Polytope& b) = default;
  friend bool operator<(const Polytope& a, const Polytope& b) {
    return a.ambient_ < b.ambient_ || (a.ambient_ == b.ambient_ && a.vertices_ < b.vertices_);
  }

 private:
  Polytope(std::size_t ambient, std::vector<RationalVector> vertices)
      : ambient_(ambient), vertices_(std::move(vertices)) {}

  std::size_t ambient_ = 0;
  std::vector<RationalVector> vertices_;
};

/// a . x <= offset (inequality) or a . x = offset (equation). Normals are
/// primitive integer vectors stored as rationals.
struct Halfspace {
  RationalVector normal;
  Rational offset;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend bool operator<(const Halfspace& x, const Halfspace& y) {
    return x.normal < y.normal || (x.normal == y.normal && x.offset < y.offset);
  }
};

struct HalfspaceSystem {
  std::size_t ambient_dim = 0;
  std::vector<Halfspace> inequalities;
  std::vector<Halfspace> equations;

  bool contains(std::span<const Rational> x) const;
  /// Satisfies every equation and every inequality strictly.
  bool contains_in_relative_interior(std::span<const Rational> x) const;

  friend bool operator==(const HalfspaceSystem&, const HalfspaceSystem&) = default;
};

HalfspaceSystem combine(const HalfspaceSystem& a, const HalfspaceSystem& b);

// ---------------------------------------------------------------------------

/// Extreme points of a nonempty point list, by an exact incremental hull on
/// integer coordinates of the affine hull.
Polytope canonicalize(std::vector<RationalVector> points);

/// h(P, v) = max over x in P of v . x.
Rational support(const Polytope& p, std::span<const Rational> v);

/// F(P, v): the vertices attaining h(P, v). Throws InputError for v = 0.
Polytope face(const Polytope& p, std::span<const Rational> v);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale(const Polytope& p, const Rational& t);
Polytope translate(const Polytope& p, std::span<const Rational> z);
Polytope negate(const Polytope& p);
Polytope apply_map(const Polytope& p, const UnimodularMap& phi);

/// Dimension of the affine hull.
std::size_t dim(const Polytope& p);

struct AffineBasis {
  RationalVector base;
  std::vector<RationalVector> edges;  // vertex differences, linearly independent
};
AffineBasis affine_basis(const Polytope& p);

/// Facet-defining inequalities within the affine hull, plus the hull's
/// equations when dim P < n. Sorted, so equal polytopes give equal systems.
HalfspaceSystem facet_system(const Polytope& p);

/// Vertices of a bounded system. Returns nullopt when the system is empty;
/// throws UnboundedError when it is feasible but unbounded.
std::optional<Polytope> vertex_enumeration(const HalfspaceSystem& h);

std::optional<Polytope> intersect(const Polytope& p, const Polytope& q);

/// n-volume; 0 for lower-dimensional input.
Rational volume(const Polytope& p);

/// Centroid with respect to dim(P)-dimensional volume in the affine hull.
RationalVector centroid(const Polytope& p);

/// |F_i| u_i for every facet of a full-dimensional polytope, in facet_system
/// order. Rational: each facet is triangulated and each simplex contributes
/// cross(edges) / (n-1)!.
std::vector<RationalVector> facet_area_vectors(const Polytope& p);

/// For dim P = n - 1: |P| w with w a unit normal of the affine hull, sign
/// fixed so the first nonzero coordinate is positive.
RationalVector hyperplane_area_vector(const Polytope& p);

bool equal(const Polytope& p, const Polytope& q);

/// A lattice simplex whose edge vectors from one vertex have coprime maximal
/// minors, i.e. a unimodular image of T_d up to translation.
bool is_basic_simplex(const Polytope& s);

/// Average of the vertices.
RationalVector vertex_average(const Polytope& p);

/// 2c - P = P for c the midpoint of the lexicographically smallest and
/// largest vertex.
bool is_centrally_symmetric(const Polytope& p);

}  // namespace latval
