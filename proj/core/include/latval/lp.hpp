#pragma once

#include "latval/exact.hpp"

#include <optional>
#include <span>

namespace latval {

/// Outcome of a feasibility query {x >= 0 : A x = b}.
///
/// Exactly one of the two members is meaningful: `solution` when the system is
/// feasible, otherwise `certificate`, a vector y with y^T A <= 0 and y^T b > 0
/// (Farkas' lemma).
struct Feasibility {
  std::optional<RationalVector> solution;
  RationalVector certificate;

  bool feasible() const { return solution.has_value(); }
};

/// Phase-one simplex on a dense rational tableau with Bland's rule, so it
/// terminates on degenerate systems.
Feasibility find_nonnegative_solution(const RationalMatrix& a, std::span<const Rational> b);

/// Feasibility of {x free : A_le x <= b_le, A_eq x = b_eq}; either block may be
/// empty (zero rows) but the column counts must agree.
bool has_solution(const RationalMatrix& a_le, std::span<const Rational> b_le,
                  const RationalMatrix& a_eq, std::span<const Rational> b_eq);

}  // namespace latval
