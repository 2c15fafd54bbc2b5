#include "latval/face_lattice.hpp"

#include <algorithm>
#include <map>

namespace latval {

std::size_t affine_rank(const std::vector<RationalVector>& points) {
  if (points.size() <= 1) return 0;
  const std::size_t n = points.front().size();
  RationalMatrix m(points.size() - 1, n);
  for (std::size_t r = 1; r < points.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = points[r][c] - points[0][c];
  return rank(m);
}

FaceLattice::FaceLattice(const Polytope& p) : polytope_(p) {
  std::vector<std::size_t> all(p.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  const HalfspaceSystem h = facet_system(p);
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& f : h.inequalities) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (dot(f.normal, p.vertices()[i]) == f.offset) tight.push_back(i);
    facets.push_back(std::move(tight));
  }

  // Every proper face is an intersection of facets.
  std::map<std::vector<std::size_t>, bool> seen;
  std::vector<std::vector<std::size_t>> frontier;
  for (auto& f : facets)
    if (seen.emplace(f, true).second) frontier.push_back(f);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& f : frontier)
      for (const auto& g : facets) {
        std::vector<std::size_t> meet;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(meet));
        if (!meet.empty() && seen.emplace(meet, true).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  seen.erase(all);

  faces_.push_back(all);
  for (auto& [f, unused] : seen) faces_.push_back(f);
  std::stable_sort(faces_.begin() + 1, faces_.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const auto& f : faces_) {
    std::vector<RationalVector> pts;
    for (auto i : f) pts.push_back(p.vertices()[i]);
    dims_.push_back(affine_rank(pts));
  }
}

Polytope FaceLattice::face_polytope(std::size_t i) const {
  std::vector<RationalVector> pts;
  for (auto idx : faces_.at(i)) pts.push_back(polytope_.vertices()[idx]);
  return Polytope::from_extreme_points(std::move(pts));
}

std::vector<std::size_t> FaceLattice::facets_of(std::size_t i) const {
  std::vector<std::size_t> out;
  if (dims_[i] == 0) return out;
  for (std::size_t j = 0; j < faces_.size(); ++j)
    if (dims_[j] + 1 == dims_[i] &&
        std::includes(faces_[i].begin(), faces_[i].end(), faces_[j].begin(), faces_[j].end()))
      out.push_back(j);
  return out;
}

std::size_t FaceLattice::find(const std::vector<std::size_t>& vertex_set) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i] == vertex_set) return i;
  return faces_.size();
}

std::vector<std::vector<std::size_t>> FaceLattice::triangulate(std::size_t i) const {
  std::vector<std::vector<std::vector<std::size_t>>> memo(faces_.size());
  std::vector<bool> done(faces_.size(), false);
  triangulate_into(i, memo, done);
  return memo[i];
}

void FaceLattice::triangulate_into(std::size_t i, std::vector<std::vector<std::vector<std::size_t>>>& memo,
                                   std::vector<bool>& done) const {
  if (done[i]) return;
  done[i] = true;
  const auto& f = faces_[i];
  if (dims_[i] == 0) {
    memo[i] = {f};
    return;
  }
  // Pull the smallest vertex: cone it over every facet that misses it.
  const std::size_t apex = f.front();
  for (auto g : facets_of(i)) {
    if (std::binary_search(faces_[g].begin(), faces_[g].end(), apex)) continue;
    triangulate_into(g, memo, done);
    for (const auto& s : memo[g]) {
      std::vector<std::size_t> simplex{apex};
      simplex.insert(simplex.end(), s.begin(), s.end());
      memo[i].push_back(std::move(simplex));
    }
  }
}

}  // namespace latval
