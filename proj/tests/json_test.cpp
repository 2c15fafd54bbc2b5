#include "latval/json.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace latval {
namespace {

using test::poly;

TEST(Json, RationalsAreStrings) {
  EXPECT_EQ(to_json(Rational(3, 6)), Json("1/2"));
  EXPECT_EQ(to_json(Rational(-4)), Json("-4"));
  EXPECT_EQ(rational_from_json(Json("6/4")), Rational(3, 2));
  EXPECT_EQ(rational_from_json(Json(7)), Rational(7));
  EXPECT_THROW(rational_from_json(Json("1/0")), FormatError);
  EXPECT_THROW(rational_from_json(Json(1.5)), FormatError);
}

TEST(Json, PolytopeRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 4;
    std::vector<RationalVector> pts = test::random_points(n, n + 3, -3, 3, seed);
    for (auto& x : pts) x[0] /= 3;
    const Polytope p = Polytope::hull(pts);
    EXPECT_EQ(polytope_from_json(Json::parse(to_json(p).dump())), p);
  }
  const Json t = to_json(Polytope::standard_simplex(2));
  EXPECT_EQ(t, Json::parse(R"({"dim":2,"vertices":[["0","0"],["0","1"],["1","0"]]})"));
}

TEST(Json, PolytopeErrors) {
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"vertices":[]})")), FormatError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim":2,"vertices":[["a","0"]]})")), FormatError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim":2,"vertices":[]})")), InputError);
  EXPECT_THROW(polytope_from_json(Json::parse(R"({"dim":2,"vertices":[["1","2","3"]]})")), DimensionError);
  // Redundant points are accepted and dropped.
  EXPECT_EQ(polytope_from_json(Json::parse(R"({"dim":1,"vertices":[["0"],["1/2"],["2"]]})")),
            Polytope::hull(std::vector<RationalVector>{{Rational(0)}, {Rational(2)}}));
}

TEST(Json, ExpansionsAndOperators) {
  EXPECT_EQ(to_json(ehrhart(Polytope::standard_simplex(2))), Json::parse(R"({"L":["1","3/2","1/2"]})"));
  const Json ell = to_json(moment_expansion(Polytope::standard_simplex(2)));
  EXPECT_EQ(ell["ell"][1], Json::parse(R"(["1/3","1/3"])"));
  const OperatorSpec op = OperatorSpec::zab(2, Rational(1, 2));
  EXPECT_EQ(to_json(op), Json::parse(R"({"kind":"z_ab","a":"2","b":"1/2"})"));
  EXPECT_EQ(operator_from_json(to_json(op)), op);
  EXPECT_EQ(operator_from_json(Json::parse(R"({"kind":"projection_scaled"})")), OperatorSpec::projection(1));
  EXPECT_THROW(operator_from_json(Json::parse(R"({"a":"1"})")), FormatError);
}

TEST(Json, DecompositionDocument) {
  const Json d = to_json(prism_triangulation(3));
  EXPECT_EQ(d["cells"].size(), 3u);
  EXPECT_EQ(d["adjacency"], Json::parse("[[0,1],[1,2]]"));
  for (const auto& c : d["cells"]) EXPECT_NO_THROW(polytope_from_json(c));
  const Json h = to_json(facet_system(poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})));
  EXPECT_EQ(h["equations"].size(), 1u);
  EXPECT_EQ(h["inequalities"].size(), 3u);
}

}  // namespace
}  // namespace latval
