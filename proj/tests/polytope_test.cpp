#include "latval/face_lattice.hpp"
#include "latval/polytope.hpp"
#include "latval/unimodular.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>

namespace latval {
namespace {

using test::poly;
using test::vec;

TEST(Hull, MatchesBruteForceExtremePoints) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 1 + seed % 3;
    const auto pts = test::random_points(n, 3 + seed % 7, 0, 3, seed);
    EXPECT_EQ(Polytope::hull(pts).vertices(), test::extreme_points_bruteforce(pts)) << "seed " << seed;
  }
}

TEST(Hull, LowerDimensionalAndRationalInputs) {
  // Collinear points in Z^3 and a planar square with a midpoint.
  const Polytope seg = poly({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
  EXPECT_EQ(seg.vertices(), (std::vector<RationalVector>{vec({0, 0, 0}), vec({3, 3, 3})}));
  const Polytope sq = poly({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}, {2, 2, 1}, {1, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(sq.size(), 4u);
  EXPECT_EQ(dim(sq), 2u);

  std::vector<RationalVector> halves{{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 3)},
                                     {Rational(1, 4), Rational(1, 6)}, {Rational(0), Rational(0)}};
  EXPECT_EQ(Polytope::hull(halves).size(), 3u);
  EXPECT_THROW(Polytope::hull(std::vector<RationalVector>{}), InputError);
  EXPECT_THROW(Polytope::hull(std::vector<RationalVector>{vec({0, 0}), vec({1})}), DimensionError);
}

TEST(Hull, StandardShapes) {
  EXPECT_EQ(Polytope::standard_simplex(3).size(), 4u);
  EXPECT_EQ(Polytope::unit_cube(4).size(), 16u);
  EXPECT_EQ(Polytope::standard_simplex(3, 1), poly({{0, 0, 0}, {1, 0, 0}}));
  EXPECT_TRUE(Polytope::unit_cube(3).is_lattice());
}

TEST(FacetSystem, TriangleInequalities) {
  const HalfspaceSystem h = facet_system(Polytope::standard_simplex(2));
  EXPECT_TRUE(h.equations.empty());
  std::vector<Halfspace> expected{{vec({-1, 0}), Rational(0)}, {vec({0, -1}), Rational(0)}, {vec({1, 1}), Rational(1)}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(h.inequalities, expected);
}

TEST(FacetSystem, FacetsAreTightOnAFlatOfCodimensionOne) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const Polytope p = Polytope::hull(test::random_points(n, n + 3, 0, 3, seed + 1000));
    const HalfspaceSystem h = facet_system(p);
    const std::size_t d = dim(p);
    EXPECT_EQ(h.equations.size(), n - d);
    for (const auto& v : p.vertices()) EXPECT_TRUE(h.contains(v));
    for (const auto& f : h.inequalities) {
      std::vector<RationalVector> tight;
      for (const auto& v : p.vertices())
        if (dot(f.normal, v) == f.offset) tight.push_back(v);
      EXPECT_EQ(affine_rank(tight) + 1, d) << "seed " << seed;
      EXPECT_LT(tight.size(), p.size());
    }
  }
}

TEST(VertexEnumeration, RoundTripsThroughFacets) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const Polytope p = Polytope::hull(test::random_points(n, n + 3, 0, 3, seed + 2000));
    const auto back = vertex_enumeration(facet_system(p));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, p);
  }
}

TEST(VertexEnumeration, EmptyAndUnbounded) {
  HalfspaceSystem empty{1, {{vec({1}), Rational(0)}, {vec({-1}), Rational(-1)}}, {}};
  EXPECT_FALSE(vertex_enumeration(empty).has_value());
  HalfspaceSystem ray{2, {{vec({-1, 0}), Rational(0)}, {vec({0, -1}), Rational(0)}}, {}};
  EXPECT_THROW(vertex_enumeration(ray), UnboundedError);
  HalfspaceSystem slab{2, {{vec({1, 0}), Rational(1)}, {vec({-1, 0}), Rational(0)}}, {}};
  EXPECT_THROW(vertex_enumeration(slab), UnboundedError);
}

TEST(Intersect, AgreesWithMembershipOnLatticePoints) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const Polytope p = Polytope::hull(test::random_points(n, n + 3, 0, 4, seed + 3000));
    const Polytope q = Polytope::hull(test::random_points(n, n + 3, 0, 4, seed + 4000));
    const auto meet = intersect(p, q);
    const HalfspaceSystem hp = facet_system(p);
    const HalfspaceSystem hq = facet_system(q);
    // Every vertex of P ∩ Q lies in both, and on a half-integer grid the
    // membership tests agree.
    if (meet) {
      for (const auto& v : meet->vertices()) {
        EXPECT_TRUE(hp.contains(v));
        EXPECT_TRUE(hq.contains(v));
      }
    }
    const std::optional<HalfspaceSystem> hm = meet ? std::optional(facet_system(*meet)) : std::nullopt;
    std::vector<long> idx(n, 0);
    for (;;) {
      RationalVector x;
      for (auto i : idx) x.emplace_back(i, 2);
      EXPECT_EQ(hp.contains(x) && hq.contains(x), hm && hm->contains(x)) << "seed " << seed;
      std::size_t k = 0;
      while (k < n && idx[k] == 8) idx[k++] = 0;
      if (k == n) break;
      ++idx[k];
    }
  }
}

TEST(Intersect, DisjointAndTouching) {
  EXPECT_FALSE(intersect(poly({{0, 0}, {1, 0}, {0, 1}}), poly({{2, 2}, {3, 2}, {2, 3}})).has_value());
  const auto touch = intersect(Polytope::unit_cube(2), translate(Polytope::unit_cube(2), vec({1, 1})));
  ASSERT_TRUE(touch.has_value());
  EXPECT_EQ(*touch, poly({{1, 1}}));
}

TEST(MinkowskiSum, SupportFunctionIsAdditive) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const Polytope p = Polytope::hull(test::random_points(n, n + 2, -2, 2, seed + 5000));
    const Polytope q = Polytope::hull(test::random_points(n, n + 2, -2, 2, seed + 6000));
    const Polytope s = minkowski_sum(p, q);
    for (const auto& v : test::random_points(n, 12, -5, 5, seed + 7000)) {
      if (is_zero(v)) continue;
      EXPECT_EQ(support(s, v), support(p, v) + support(q, v));
    }
  }
}

TEST(MinkowskiSum, ScaleTranslateNegate) {
  const Polytope t = Polytope::standard_simplex(2);
  EXPECT_EQ(minkowski_sum(t, t), scale(t, Rational(2)));
  EXPECT_EQ(scale(t, Rational(0)), poly({{0, 0}}));
  EXPECT_EQ(negate(t), poly({{0, 0}, {-1, 0}, {0, -1}}));
  EXPECT_EQ(translate(t, vec({1, 2})), poly({{1, 2}, {2, 2}, {1, 3}}));
  EXPECT_EQ(face(Polytope::unit_cube(2), vec({1, 0})), poly({{1, 0}, {1, 1}}));
  EXPECT_THROW(face(t, vec({0, 0})), InputError);
}

TEST(Volume, PlanarShoelaceOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Polytope p = Polytope::hull(test::random_points(2, 3 + seed % 6, 0, 5, seed + 8000));
    if (dim(p) < 2) continue;
    const auto [area, center] = test::shoelace(p);
    EXPECT_EQ(volume(p), area);
    EXPECT_EQ(centroid(p), center);
  }
}

TEST(Volume, ClosedFormsAndInvariance) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(volume(Polytope::standard_simplex(n)), Rational(1) / Rational(factorial(n)));
    EXPECT_EQ(volume(Polytope::unit_cube(n)), Rational(1));
  }
  EXPECT_EQ(volume(Polytope::standard_simplex(3, 2)), Rational(0));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 3 + seed % 2;
    const Polytope p = Polytope::hull(test::random_points(n, n + 3, 0, 3, seed + 9000));
    const UnimodularMap phi = random_unimodular(n, kDefaultUnimodularSteps, seed);
    EXPECT_EQ(volume(apply_map(p, phi)), volume(p));
    Rational k3(1);
    for (std::size_t i = 0; i < n; ++i) k3 *= 3;
    EXPECT_EQ(volume(scale(p, Rational(3))), k3 * volume(p));
  }
}

TEST(Centroid, ClosedFormsAndEquivariance) {
  EXPECT_EQ(centroid(Polytope::standard_simplex(3)), (RationalVector(3, Rational(1, 4))));
  EXPECT_EQ(centroid(Polytope::unit_cube(3)), (RationalVector(3, Rational(1, 2))));
  EXPECT_EQ(centroid(poly({{0, 0, 0}, {2, 2, 2}})), vec({1, 1, 1}));
  // A planar trapezoid sitting in Z^3 against the shoelace oracle in the plane.
  const Polytope flat = poly({{0, 0, 5}, {2, 0, 5}, {1, 1, 5}, {0, 1, 5}});
  const auto [area, c2] = test::shoelace(poly({{0, 0}, {2, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(centroid(flat), (RationalVector{c2[0], c2[1], Rational(5)}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Polytope p = Polytope::hull(test::random_points(3, 6, 0, 3, seed + 9500));
    const UnimodularMap phi = random_unimodular(3, kDefaultUnimodularSteps, seed);
    EXPECT_EQ(centroid(apply_map(p, phi)), phi.apply(centroid(p)));
  }
}

TEST(AreaVectors, SimplexAndMinkowskiRelation) {
  auto z = facet_area_vectors(Polytope::standard_simplex(2));
  std::sort(z.begin(), z.end());
  std::vector<RationalVector> expected{vec({-1, 0}), vec({0, -1}), vec({1, 1})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(z, expected);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const Polytope p = Polytope::hull(test::random_points(n, n + 4, 0, 4, seed + 9700));
    if (dim(p) < n) continue;
    RationalVector total = zero_vector(n);
    for (const auto& v : facet_area_vectors(p)) total = add(total, v);
    EXPECT_TRUE(is_zero(total));
  }
  EXPECT_EQ(hyperplane_area_vector(Polytope::standard_simplex(3, 2)), (RationalVector{0, 0, Rational(1, 2)}));
}

TEST(Predicates, BasicSimplexAndCentralSymmetry) {
  EXPECT_TRUE(is_basic_simplex(Polytope::standard_simplex(3)));
  EXPECT_TRUE(is_basic_simplex(Polytope::standard_simplex(3, 1)));
  EXPECT_TRUE(is_basic_simplex(poly({{1, 1}, {2, 1}, {2, 2}})));
  EXPECT_FALSE(is_basic_simplex(poly({{0, 0}, {2, 0}, {0, 1}})));
  EXPECT_FALSE(is_basic_simplex(Polytope::unit_cube(2)));
  EXPECT_TRUE(is_centrally_symmetric(Polytope::unit_cube(3)));
  EXPECT_TRUE(is_centrally_symmetric(poly({{0, 0}, {3, 1}})));
  EXPECT_FALSE(is_centrally_symmetric(Polytope::standard_simplex(2)));
}

TEST(FaceLattice, CubeFVectorAndEulerRelation) {
  const FaceLattice cube(Polytope::unit_cube(3));
  std::map<std::size_t, int> f;
  for (std::size_t i = 0; i < cube.size(); ++i) ++f[cube.face_dim(i)];
  EXPECT_EQ(f, (std::map<std::size_t, int>{{0, 8}, {1, 12}, {2, 6}, {3, 1}}));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const FaceLattice l(Polytope::hull(test::random_points(n, n + 4, 0, 3, seed + 9900)));
    int euler = 0;
    for (std::size_t i = 0; i < l.size(); ++i) euler += l.face_dim(i) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(euler, 1) << "seed " << seed;
  }
}

TEST(FaceLattice, TriangulationCoversTheVolume) {
  const Polytope p = poly({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {2, 1, 0}, {0, 0, 1}, {2, 0, 1}, {0, 1, 1}, {2, 1, 1}});
  const FaceLattice l(p);
  Rational total(0);
  for (const auto& s : l.triangulate()) {
    ASSERT_EQ(s.size(), 4u);
    RationalMatrix m(3, 3);
    for (std::size_t r = 1; r <= 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r - 1, c) = p.vertices()[s[r]][c] - p.vertices()[s[0]][c];
    EXPECT_NE(det(m), 0);
    total += abs(det(m)) / 6;
  }
  EXPECT_EQ(total, Rational(2));
}

}  // namespace
}  // namespace latval
