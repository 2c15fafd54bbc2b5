#include "hull.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latval::detail {

namespace {

struct Facet {
  std::vector<std::size_t> verts;  // sorted
  IntVector normal;
  Integer offset;
  std::vector<std::size_t> outside;
  bool alive = true;
};

Integer idot(const IntVector& a, const IntVector& y) {
  Integer s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * y[i];
  return s;
}

class Builder {
 public:
  Builder(std::vector<IntVector> y, IntVector interior_sum, Integer interior_weight)
      : y_(std::move(y)), sum_(std::move(interior_sum)), weight_(std::move(interior_weight)), d_(y_.front().size()) {}

  // Oriented so that the interior point lies strictly beneath.
  Facet make(std::vector<std::size_t> verts) const {
    std::sort(verts.begin(), verts.end());
    IntMatrix m(d_, d_);
    for (std::size_t r = 1; r < d_; ++r)
      for (std::size_t c = 0; c < d_; ++c) m(r - 1, c) = y_[verts[r]][c] - y_[verts[0]][c];
    IntVector a(d_);
    Integer g(0);
    for (std::size_t k = 0; k < d_; ++k) {
      for (std::size_t c = 0; c < d_; ++c) m(d_ - 1, c) = c == k ? 1 : 0;
      a[k] = det(m);
      g = gcd(g, a[k]);
    }
    if (g == 0) throw ConsistencyError("convex_hull: degenerate facet");
    for (auto& x : a) x /= g;
    Integer b = idot(a, y_[verts[0]]);
    if (idot(a, sum_) > weight_ * b) {
      for (auto& x : a) x = -x;
      b = -b;
    }
    return {std::move(verts), std::move(a), std::move(b), {}, true};
  }

  bool beyond(const Facet& f, std::size_t i) const { return idot(f.normal, y_[i]) > f.offset; }
  Integer height(const Facet& f, std::size_t i) const { return idot(f.normal, y_[i]) - f.offset; }

 private:
  std::vector<IntVector> y_;
  IntVector sum_;
  Integer weight_;
  std::size_t d_;
};

}  // namespace

HullResult convex_hull(const std::vector<RationalVector>& points) {
  const std::size_t count = points.size();
  const std::size_t n = points.front().size();
  HullResult result;
  if (count == 1) {
    result.extreme = {0};
    return result;
  }

  // Affinely independent points by incremental row reduction; the pivot
  // columns are coordinates on which the affine hull projects bijectively.
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> base{0};
  for (std::size_t i = 1; i < count && rows.size() < n; ++i) {
    RationalVector v = sub(points[i], points[0]);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (v[pivots[k]] != 0) {
        const Rational f = v[pivots[k]];
        for (std::size_t c = 0; c < n; ++c) v[c] -= f * rows[k][c];
      }
    std::size_t p = 0;
    while (p < n && v[p] == 0) ++p;
    if (p == n) continue;
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    for (auto& row : rows)
      if (row[p] != 0) {
        const Rational f = row[p];
        for (std::size_t c = 0; c < n; ++c) row[c] -= f * v[c];
      }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    base.push_back(i);
  }
  const std::size_t d = rows.size();
  result.dim = d;
  std::vector<std::size_t> coords = pivots;
  std::sort(coords.begin(), coords.end());

  Integer scale(1);
  for (const auto& x : points)
    for (auto c : coords) scale = lcm(scale, denominator(x[c]));
  std::vector<IntVector> y(count, IntVector(d));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t k = 0; k < d; ++k) y[i][k] = numerator(points[i][coords[k]] * scale);

  if (d == 1) {
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 1; i < count; ++i) {
      if (y[i][0] < y[lo][0]) lo = i;
      if (y[i][0] > y[hi][0]) hi = i;
    }
    result.extreme = {std::min(lo, hi), std::max(lo, hi)};
    if (n == 1) {
      result.facets.push_back({{Rational(-1)}, -points[lo][0]});
      result.facets.push_back({{Rational(1)}, points[hi][0]});
    }
    return result;
  }

  IntVector sum(d, Integer(0));
  for (auto i : base)
    for (std::size_t k = 0; k < d; ++k) sum[k] += y[i][k];
  const Builder builder(y, sum, Integer(static_cast<long>(d + 1)));

  std::vector<Facet> facets;
  for (std::size_t drop = 0; drop <= d; ++drop) {
    std::vector<std::size_t> verts;
    for (std::size_t k = 0; k <= d; ++k)
      if (k != drop) verts.push_back(base[k]);
    facets.push_back(builder.make(std::move(verts)));
  }
  {
    std::vector<char> in_base(count, 0);
    for (auto i : base) in_base[i] = 1;
    for (std::size_t i = 0; i < count; ++i) {
      if (in_base[i]) continue;
      for (auto& f : facets)
        if (builder.beyond(f, i)) {
          f.outside.push_back(i);
          break;
        }
    }
  }

  for (std::size_t current = 0; current < facets.size(); ++current) {
    if (!facets[current].alive || facets[current].outside.empty()) continue;
    const auto& out = facets[current].outside;
    std::size_t apex = out.front();
    Integer best = builder.height(facets[current], apex);
    for (auto i : out) {
      Integer h = builder.height(facets[current], i);
      if (h > best) {
        best = std::move(h);
        apex = i;
      }
    }

    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (facets[f].alive && builder.beyond(facets[f], apex)) visible.push_back(f);

    std::map<std::vector<std::size_t>, int> ridges;
    for (auto f : visible) {
      const auto& v = facets[f].verts;
      for (std::size_t drop = 0; drop < v.size(); ++drop) {
        std::vector<std::size_t> ridge;
        for (std::size_t k = 0; k < v.size(); ++k)
          if (k != drop) ridge.push_back(v[k]);
        ++ridges[ridge];
      }
    }
    const std::size_t first_new = facets.size();
    for (const auto& [ridge, c] : ridges) {
      if (c != 1) continue;
      auto verts = ridge;
      verts.push_back(apex);
      facets.push_back(builder.make(std::move(verts)));
    }
    for (auto f : visible) {
      facets[f].alive = false;
      for (auto i : facets[f].outside) {
        if (i == apex) continue;
        for (std::size_t g = first_new; g < facets.size(); ++g)
          if (builder.beyond(facets[g], i)) {
            facets[g].outside.push_back(i);
            break;
          }
      }
      facets[f].outside.clear();
      facets[f].outside.shrink_to_fit();
    }
  }

  // Coplanar pieces can leave boundary points that are not extreme: keep a
  // point only if the normals of its incident facets span the whole space.
  std::map<std::size_t, std::set<IntVector>> incident;
  std::set<std::pair<IntVector, Integer>> planes;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    for (auto v : f.verts) incident[v].insert(f.normal);
    planes.emplace(f.normal, f.offset);
  }
  for (const auto& [v, normals] : incident) {
    RationalMatrix m(normals.size(), d);
    std::size_t r = 0;
    for (const auto& a : normals) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = a[c];
      ++r;
    }
    if (rank(m) == d) result.extreme.push_back(v);
  }

  if (d == n)
    for (const auto& [a, b] : planes) result.facets.push_back({to_rational(a), Rational(b) / Rational(scale)});
  std::sort(result.facets.begin(), result.facets.end());
  return result;
}

}  // namespace latval::detail
