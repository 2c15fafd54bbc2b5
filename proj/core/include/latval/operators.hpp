#pragma once

// Minkowski valuations on lattice polytopes: the difference body, the
// equivariant family Z_{a,b}, the projection body, the planar contravariant
// family, plus two deliberately broken variants used as negative controls.

#include "latval/polynomial.hpp"
#include "latval/polytope.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace latval {

enum class OperatorKind {
  difference_scaled,  // c (P - P)
  z_ab,               // a (P - dst P) + b (-P + dst P)
  projection_scaled,  // c Pi P
  rot_z_ab_2d,        // rho_{pi/2} Z_{a,b} P, planar only
  zero,               // {o}
  // Negative controls. Not valuations / not covariant; the suites must catch
  // them.
  z_ab_centroid_control,  // Z_{a,b} with the centroid in place of dst
  projection_flipped_control,  // sum of [o, z_i] with the first area vector negated
};

std::string_view to_string(OperatorKind kind);
OperatorKind parse_operator_kind(std::string_view name);

struct OperatorSpec {
  OperatorKind kind = OperatorKind::zero;
  Rational a{0};
  Rational b{0};
  Rational c{0};

  static OperatorSpec difference(Rational c = Rational(1)) { return {OperatorKind::difference_scaled, 0, 0, std::move(c)}; }
  static OperatorSpec zab(Rational a, Rational b) { return {OperatorKind::z_ab, std::move(a), std::move(b), 0}; }
  static OperatorSpec projection(Rational c = Rational(1)) { return {OperatorKind::projection_scaled, 0, 0, std::move(c)}; }
  static OperatorSpec rot_zab(Rational a, Rational b) { return {OperatorKind::rot_z_ab_2d, std::move(a), std::move(b), 0}; }

  /// Throws InputError for negative parameters, or when rot_z_ab_2d is used
  /// outside ambient dimension 2 (pass n = 0 to skip that check).
  void validate(std::size_t n = 0) const;

  /// true for contravariant operators (projection family, planar rotation).
  bool contravariant() const;
  bool is_control() const;

  std::string describe() const;

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;
};

Polytope difference_body(const Polytope& p);
Polytope z_ab(const Polytope& p, const Rational& a, const Rational& b);
Polytope projection_body(const Polytope& p);
/// (x, y) -> (-y, x); ambient dimension 2 only.
Polytope rotate90(const Polytope& p);
Polytope contra_z_ab_2d(const Polytope& p, const Rational& a, const Rational& b);

/// Generators of the projection body zonotope: Pi P = sum of [-g, g].
std::vector<RationalVector> projection_generators(const Polytope& p);

/// Minkowski sum of the segments [-g, g].
Polytope zonotope(const std::vector<RationalVector>& generators, std::size_t n);

Polytope evaluate(const OperatorSpec& op, const Polytope& p);
/// Z(∅) = {o}.
Polytope evaluate(const OperatorSpec& op, const std::optional<Polytope>& p, std::size_t n);

/// [-c, c]^n.
Polytope centered_cube(std::size_t n, const Rational& c);

struct HomogeneousPart {
  ExactPolynomial polynomial;  // k -> h(Z(kP), v)
  Rational leading;            // coefficient of k^n
};

/// Interpolates k -> h(Z(kP), v) at k = 1..n+1 (degree <= n) and checks the
/// fit on k = n+2..kmax. Throws ConsistencyError on a mismatch.
HomogeneousPart homogeneous_part(const OperatorSpec& op, const Polytope& p, std::span<const Rational> v,
                                 std::size_t kmax);

}  // namespace latval
