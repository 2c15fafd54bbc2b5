#pragma once

#include "latval/polytope.hpp"

#include <cstddef>
#include <vector>

namespace latval {

/// All nonempty faces of a polytope, as sorted vertex-index sets into
/// P.vertices(). Index 0 is P itself.
class FaceLattice {
 public:
  explicit FaceLattice(const Polytope& p);

  const Polytope& polytope() const { return polytope_; }
  std::size_t size() const { return faces_.size(); }
  const std::vector<std::size_t>& face(std::size_t i) const { return faces_[i]; }
  std::size_t face_dim(std::size_t i) const { return dims_[i]; }
  Polytope face_polytope(std::size_t i) const;

  /// Faces of dimension face_dim(i) - 1 contained in face i.
  std::vector<std::size_t> facets_of(std::size_t i) const;

  /// Pulling triangulation of face i: simplices as vertex-index sets, each
  /// with face_dim(i) + 1 vertices.
  std::vector<std::vector<std::size_t>> triangulate(std::size_t i) const;
  std::vector<std::vector<std::size_t>> triangulate() const { return triangulate(0); }

  /// Index of the face with exactly these vertices, or size() if none.
  std::size_t find(const std::vector<std::size_t>& vertex_set) const;

 private:
  void triangulate_into(std::size_t i, std::vector<std::vector<std::vector<std::size_t>>>& memo,
                        std::vector<bool>& done) const;

  Polytope polytope_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::size_t> dims_;
};

/// Rank of the differences of the given points.
std::size_t affine_rank(const std::vector<RationalVector>& points);

}  // namespace latval
