#pragma once

#include "latval/exact.hpp"
#include "latval/polytope.hpp"
#include "latval/random.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <vector>

namespace latval::test {

inline RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Polytope poly(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<RationalVector> v;
  for (const auto& p : pts) v.push_back(vec(p));
  return Polytope::hull(std::move(v));
}

inline std::vector<RationalVector> random_points(std::size_t n, std::size_t count, std::int64_t lo, std::int64_t hi,
                                                 std::uint64_t seed) {
  Engine rng = make_engine(seed, 77, 0);
  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < count; ++i) {
    RationalVector x;
    for (std::size_t c = 0; c < n; ++c) x.emplace_back(uniform_int(rng, lo, hi));
    pts.push_back(std::move(x));
  }
  return pts;
}

/// x in conv(pts), by brute force over affinely independent subsets
/// (Caratheodory): solve for barycentric coordinates and test their signs.
inline bool in_hull_bruteforce(const std::vector<RationalVector>& pts, const RationalVector& x) {
  const std::size_t n = x.size();
  const std::size_t m = pts.size();
  for (std::size_t size = 1; size <= std::min(m, n + 1); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      // Least-squares-free approach: x - p0 = sum_{j>=1} t_j (p_j - p0), with
      // the p_j - p0 independent, solved on the normal equations.
      RationalMatrix g(size - 1, size - 1);
      RationalVector rhs(size - 1);
      std::vector<RationalVector> e;
      for (std::size_t j = 1; j < size; ++j) e.push_back(sub(pts[idx[j]], pts[idx[0]]));
      const RationalVector d = sub(x, pts[idx[0]]);
      for (std::size_t r = 0; r + 1 < size; ++r) {
        for (std::size_t c = 0; c + 1 < size; ++c) g(r, c) = dot(e[r], e[c]);
        rhs[r] = dot(e[r], d);
      }
      std::optional<RationalVector> t = size == 1 ? std::optional<RationalVector>(RationalVector{}) : solve_linear(g, rhs);
      if (t) {
        RationalVector back = pts[idx[0]];
        Rational total(0);
        bool nonneg = true;
        for (std::size_t j = 0; j + 1 < size; ++j) {
          back = add(back, scaled(e[j], (*t)[j]));
          total += (*t)[j];
          nonneg = nonneg && (*t)[j] >= 0;
        }
        if (nonneg && total <= 1 && back == x) return true;
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

/// Extreme points by the brute-force membership oracle.
inline std::vector<RationalVector> extreme_points_bruteforce(std::vector<RationalVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (others.empty() || !in_hull_bruteforce(others, pts[i])) out.push_back(pts[i]);
  }
  return out;
}

/// Shoelace area and centroid of a convex polygon given by its vertices.
inline std::pair<Rational, RationalVector> shoelace(const Polytope& p) {
  // Order vertices by angle around the vertex average using exact
  // half-plane / cross-product comparisons.
  const auto& v = p.vertices();
  RationalVector c = zero_vector(2);
  for (const auto& x : v) c = add(c, x);
  c = scaled(c, Rational(1) / Rational(static_cast<long>(v.size())));
  std::vector<RationalVector> ring(v.begin(), v.end());
  auto half = [&](const RationalVector& x) {
    const Rational dx = x[0] - c[0];
    const Rational dy = x[1] - c[1];
    return dy > 0 || (dy == 0 && dx > 0) ? 0 : 1;
  };
  std::sort(ring.begin(), ring.end(), [&](const RationalVector& a, const RationalVector& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]) > 0;
  });
  Rational twice_area(0);
  RationalVector moment = zero_vector(2);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& a = ring[i];
    const auto& b = ring[(i + 1) % ring.size()];
    const Rational w = a[0] * b[1] - b[0] * a[1];
    twice_area += w;
    moment[0] += (a[0] + b[0]) * w;
    moment[1] += (a[1] + b[1]) * w;
  }
  const Rational area = twice_area / 2;
  return {area, scaled(moment, Rational(1) / (3 * twice_area))};
}

}  // namespace latval::test
