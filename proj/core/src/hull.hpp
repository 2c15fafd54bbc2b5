#pragma once

#include "latval/polytope.hpp"

#include <vector>

namespace latval::detail {

struct HullResult {
  std::vector<std::size_t> extreme;  // indices of the extreme points, increasing
  std::size_t dim = 0;               // affine dimension of the point set
  // Facet inequalities a.x <= b with primitive integer a; filled only when the
  // points are full-dimensional.
  std::vector<Halfspace> facets;
};

/// Incremental beneath-beyond hull with outside sets, in exact integer
/// arithmetic on the coordinates that parametrize the affine hull. `points`
/// must be nonempty and pairwise distinct.
HullResult convex_hull(const std::vector<RationalVector>& points);

}  // namespace latval::detail
