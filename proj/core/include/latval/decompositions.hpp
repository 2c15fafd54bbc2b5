#pragma once

// Cell decompositions of lattice polytopes and the inclusion-exclusion
// identity over their interior-meeting faces, plus certified (P, Q, P ∪ Q,
// P ∩ Q) quadruples for checking the valuation property.

#include "latval/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latval {

struct DecompositionFace {
  Polytope polytope;
  std::size_t dim = 0;
  bool meets_interior = false;
};

struct CellDecomposition {
  std::string name;
  Polytope target;
  std::vector<Polytope> cells;
  std::vector<DecompositionFace> faces;  // all faces of all cells, deduplicated

  /// m -> number of m-dimensional faces meeting the interior of the target.
  std::map<std::size_t, std::size_t> interior_census() const;

  /// Interior-meeting (n-1)-faces grouped by the primitive normal of their
  /// affine hull (sign fixed so the first nonzero entry is positive).
  std::map<RationalVector, std::size_t> interior_facet_normals() const;

  /// Pairs (i, j), i < j, of cells with dim(C_i ∩ C_j) = n - 1.
  std::vector<std::pair<std::size_t, std::size_t>> adjacency() const;

  /// Empty when the decomposition is valid: cells lie in the target, volumes
  /// add up, pairwise intersections are common faces, and the interior flags
  /// agree with the boundary of the target.
  std::vector<std::string> validate() const;
};

/// Builds the face list and interior flags for the given cells.
CellDecomposition make_decomposition(std::string name, Polytope target, std::vector<Polytope> cells);

struct ValuationQuadruple {
  std::string label;
  Polytope p;
  Polytope q;
  Polytope u;  // conv(P ∪ Q), certified equal to P ∪ Q
  std::optional<Polytope> i;  // P ∩ Q
};

/// Forms U = conv(P ∪ Q) and I = P ∩ Q and admits the quadruple only if U is
/// full-dimensional and vol P + vol Q = vol U + vol I, which certifies
/// U = P ∪ Q. Throws InputError with a diagnostic otherwise.
ValuationQuadruple make_quadruple(std::string label, const Polytope& p, const Polytope& q);

/// T_n, R_n, [0,1]^n, [e_1, ..., e_n].
ValuationQuadruple corner_split(std::size_t n);

/// S_1 = T_n and S_i = [e_0 + e_n, ..., e_{i-1} + e_n, e_{i-1}, ..., e_{n-1}]
/// (e_0 = o) for i = 2..n, dissecting T_{n-1} + [o, e_n].
CellDecomposition prism_triangulation(std::size_t n);

/// n! basic simplices on the vertices of [0,1]^n with T_n as the first cell:
/// the placing triangulation for vertices ordered by coordinate sum, then
/// lexicographically.
CellDecomposition cube_triangulation(std::size_t n);

/// k^n translated unit cubes filling k [0,1]^n.
CellDecomposition grid_decomposition(std::size_t n, std::size_t k);

enum class ScalarValuation { count, volume, moment };

/// Valuation value as a vector (length 1 for count and volume).
RationalVector valuation_value(ScalarValuation which, const Polytope& p);

/// Alternating sum of the valuation over interior-meeting faces, signs
/// (-1)^{n - dim F}.
RationalVector inclusion_exclusion_sum(const CellDecomposition& d, ScalarValuation which);
bool inclusion_exclusion_check(const CellDecomposition& d, ScalarValuation which);

/// Curated certified quadruples for n in {2, 3, 4}.
std::vector<ValuationQuadruple> quadruples_library(std::size_t n);

}  // namespace latval
