#pragma once

// Lattice-point enumeration and the valuations built on it: the counting
// functional L, the discrete moment vector l, their dilation polynomials,
// and the discrete Steiner point dst = l_1.

#include "latval/polynomial.hpp"
#include "latval/polytope.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace latval {

/// Precomputed integer facet data of a polytope, reused for every dilate kP
/// (kP has the same normals with offsets scaled by k).
class LatticePointEnumerator {
 public:
  explicit LatticePointEnumerator(const Polytope& p);

  std::size_t ambient_dim() const { return n_; }

  /// Visits the lattice points of kP in lexicographic order.
  void for_each(std::int64_t k, const std::function<void(std::span<const std::int64_t>)>& visit) const;

  Integer count(std::int64_t k = 1) const;
  IntVector moment(std::int64_t k = 1) const;

 private:
  struct Row {
    std::vector<std::int64_t> normal;
    Rational offset;
  };
  // Calls visit(prefix, lo, hi) for every admissible prefix x_1..x_{n-1};
  // the admissible last coordinates are lo..hi.
  void for_each_run(std::int64_t k,
                    const std::function<void(std::span<const std::int64_t>, std::int64_t, std::int64_t)>& visit) const;

  std::size_t n_;
  std::vector<Row> inequalities_;
  std::vector<Row> equations_;
  std::vector<Rational> lower_;  // bounding box of P
  std::vector<Rational> upper_;
};

std::vector<IntVector> enumerate_lattice_points(const Polytope& p);

/// L(P) = #(P ∩ Z^n); L(∅) = 0.
Integer count(const Polytope& p);
Integer count(const std::optional<Polytope>& p);

/// l(P) = sum of the lattice points of P; l(∅) = o (length n required).
IntVector discrete_moment(const Polytope& p);
IntVector discrete_moment(const std::optional<Polytope>& p, std::size_t n);

/// k -> L(kP) for a lattice polytope.
struct EhrhartExpansion {
  Polytope polytope;
  ExactPolynomial polynomial;

  /// L_i(P); zero past dim P.
  Rational coefficient(std::size_t i) const { return polynomial.coefficient(i); }
  std::vector<Rational> coefficients() const;  // L_0 .. L_n
};

/// k -> l(kP), zero constant term.
struct MomentExpansion {
  Polytope polytope;
  VectorPolynomial polynomial;

  RationalVector coefficient(std::size_t i) const { return polynomial.coefficient(i); }
  std::vector<RationalVector> coefficients() const;  // l_0 (= o) .. l_{n+1}
};

/// Interpolates L(kP) at k = 0..n. Throws InputError for non-lattice input
/// and ConsistencyError if the degree is not dim P.
EhrhartExpansion ehrhart(const Polytope& p);

/// Interpolates l(kP) at k = 0..n+1 coordinatewise. Throws ConsistencyError
/// if the constant term is nonzero.
MomentExpansion moment_expansion(const Polytope& p);

/// dst(P) = l_1(P).
RationalVector discrete_steiner(const Polytope& p);

/// Fits a polynomial of total degree <= degree_bound to (k, l) -> L(kP + lQ)
/// on the triangle k + l <= degree_bound, then checks every other point of
/// the square grid {0..degree_bound}^2 and three points outside it.
bool bivariate_count_check(const Polytope& p, const Polytope& q, std::size_t degree_bound);

/// L_1(P + Q) == L_1(P) + L_1(Q).
bool L1_additivity_check(const Polytope& p, const Polytope& q);

}  // namespace latval
