#include "latval/ehrhart.hpp"
#include "latval/unimodular.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace latval {
namespace {

using test::poly;
using test::vec;

// Lattice points of P by scanning its bounding box against the facet system.
std::vector<IntVector> scan(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  const HalfspaceSystem h = facet_system(p);
  IntVector lo(n);
  IntVector hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    lo[c] = ceil(-support(p, scaled(unit_vector(n, c), Rational(-1))));
    hi[c] = floor(support(p, unit_vector(n, c)));
  }
  std::vector<IntVector> out;
  for (std::size_t c = 0; c < n; ++c)
    if (lo[c] > hi[c]) return out;
  IntVector x = lo;
  for (;;) {
    if (h.contains(to_rational(x))) out.push_back(x);
    std::size_t c = n;
    while (c > 0 && x[c - 1] == hi[c - 1]) {
      x[c - 1] = lo[c - 1];
      --c;
    }
    if (c == 0) break;
    ++x[c - 1];
  }
  return out;
}

// Boundary lattice points of a lattice polygon: sum of gcds of edge vectors.
Integer boundary_points(const Polytope& p) {
  const HalfspaceSystem h = facet_system(p);
  Integer b(0);
  for (const auto& f : h.inequalities) {
    std::vector<RationalVector> edge;
    for (const auto& v : p.vertices())
      if (dot(f.normal, v) == f.offset) edge.push_back(v);
    const RationalVector d = sub(edge[1], edge[0]);
    b += gcd(numerator(d[0]), numerator(d[1]));
  }
  return b;
}

TEST(Enumeration, MatchesBoxScan) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const Polytope p = Polytope::hull(test::random_points(n, n + 2, -3, 3, seed));
    EXPECT_EQ(enumerate_lattice_points(p), scan(p)) << "seed " << seed;
  }
  std::vector<RationalVector> rational{{Rational(1, 2), Rational(1, 3)}, {Rational(7, 2), Rational(1, 3)},
                                       {Rational(1, 2), Rational(11, 4)}};
  const Polytope r = Polytope::hull(rational);
  EXPECT_EQ(enumerate_lattice_points(r), scan(r));
}

TEST(Enumeration, CountsAndMomentsOfDilates) {
  const LatticePointEnumerator e(Polytope::standard_simplex(2));
  for (std::int64_t k = 0; k < 8; ++k) {
    EXPECT_EQ(e.count(k), Integer((k + 1) * (k + 2) / 2));
    // sum of x over {x, y >= 0, x + y <= k} = k (k + 1) (k + 2) / 6
    EXPECT_EQ(e.moment(k), (IntVector{Integer(k * (k + 1) * (k + 2) / 6), Integer(k * (k + 1) * (k + 2) / 6)}));
  }
  EXPECT_EQ(count(std::optional<Polytope>{}), Integer(0));
}

TEST(Ehrhart, GoldenPolynomials) {
  // L(k T_2) = (k+1)(k+2)/2 and L(k [0,1]^3) = (k+1)^3.
  EXPECT_EQ(ehrhart(Polytope::standard_simplex(2)).coefficients(),
            (std::vector<Rational>{1, Rational(3, 2), Rational(1, 2)}));
  EXPECT_EQ(ehrhart(Polytope::unit_cube(3)).coefficients(), (std::vector<Rational>{1, 3, 3, 1}));
  EXPECT_EQ(ehrhart(scale(Polytope::standard_simplex(2), Rational(2))).coefficients(),
            (std::vector<Rational>{1, 3, 2}));
  EXPECT_EQ(ehrhart(poly({{0, 0, 0}, {1, 1, 1}})).polynomial.degree(), 1);
  // Reeve tetrahedron of height r: L(kT) = 1 + (2 - r/6) k + k^2 + (r/6) k^3.
  const Polytope reeve = poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}});
  EXPECT_EQ(ehrhart(reeve).coefficients(), (std::vector<Rational>{1, Rational(3, 2), 1, Rational(1, 2)}));
  EXPECT_THROW(ehrhart(Polytope::hull(std::vector<RationalVector>{{Rational(1, 2)}, {Rational(2)}})), InputError);
}

TEST(Ehrhart, PickTheoremOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Polytope p = Polytope::hull(test::random_points(2, 3 + seed % 5, 0, 6, seed + 100));
    if (dim(p) < 2) continue;
    const EhrhartExpansion e = ehrhart(p);
    const auto [area, center] = test::shoelace(p);
    EXPECT_EQ(e.coefficient(2), area);
    EXPECT_EQ(e.coefficient(1), Rational(boundary_points(p)) / 2);
    EXPECT_EQ(e.coefficient(0), Rational(1));
  }
}

TEST(Ehrhart, UnimodularInvariance) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Polytope p = Polytope::hull(test::random_points(3, 6, 0, 3, seed + 200));
    const UnimodularMap phi = random_unimodular(3, kDefaultUnimodularSteps, seed);
    const Polytope q = translate(apply_map(p, phi), vec({2, -1, 5}));
    EXPECT_EQ(count(q), count(p));
    EXPECT_EQ(ehrhart(q).polynomial, ehrhart(p).polynomial);
    // l(phi P + z) = phi l(P) + L(P) z.
    const RationalVector expected =
        add(phi.apply(to_rational(discrete_moment(p))), scaled(vec({2, -1, 5}), Rational(count(p))));
    EXPECT_EQ(to_rational(discrete_moment(q)), expected);
  }
}

TEST(MomentExpansion, SimplexAndSteinerPoint) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(discrete_steiner(Polytope::standard_simplex(n)),
              RationalVector(n, Rational(1, static_cast<long>(n + 1))));
  }
  const MomentExpansion m = moment_expansion(Polytope::standard_simplex(2));
  // l(k T_2) = (k (k+1) (k+2) / 6) (1, 1)
  EXPECT_EQ(m.coefficients().size(), 4u);
  EXPECT_EQ(m.coefficient(0), zero_vector(2));
  EXPECT_EQ(m.coefficient(1), (RationalVector(2, Rational(1, 3))));
  EXPECT_EQ(m.coefficient(2), (RationalVector(2, Rational(1, 2))));
  EXPECT_EQ(m.coefficient(3), (RationalVector(2, Rational(1, 6))));
  EXPECT_EQ(discrete_steiner(Polytope::unit_cube(3)), (RationalVector(3, Rational(1, 2))));
}

TEST(Ehrhart, BivariateAndAdditivityChecks) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const Polytope p = Polytope::hull(test::random_points(n, n + 2, 0, 3, seed + 300));
    const Polytope q = Polytope::hull(test::random_points(n, n + 2, 0, 3, seed + 400));
    EXPECT_TRUE(bivariate_count_check(p, q, n));
    EXPECT_TRUE(L1_additivity_check(p, q));
  }
}

}  // namespace
}  // namespace latval
