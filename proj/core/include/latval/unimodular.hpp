#pragma once

#include "latval/exact.hpp"

#include <cstdint>

namespace latval {

/// An element of SL_n(Z) together with its (integer) inverse.
class UnimodularMap {
 public:
  /// Validates det(matrix) = 1 and computes the inverse. Throws InputError
  /// otherwise.
  explicit UnimodularMap(IntMatrix matrix);

  static UnimodularMap identity(std::size_t n);

  std::size_t dim() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  const IntMatrix& inverse_matrix() const { return inverse_; }

  UnimodularMap inverse() const { return UnimodularMap(inverse_, matrix_); }
  UnimodularMap inverse_transpose() const {
    return UnimodularMap(inverse_.transpose(), matrix_.transpose());
  }

  RationalVector apply(std::span<const Rational> x) const { return multiply(matrix_, x); }

  friend UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g) {
    return UnimodularMap(f.matrix_ * g.matrix_, g.inverse_ * f.inverse_);
  }
  friend bool operator==(const UnimodularMap& f, const UnimodularMap& g) {
    return f.matrix_ == g.matrix_;
  }

 private:
  UnimodularMap(IntMatrix matrix, IntMatrix inverse)
      : matrix_(std::move(matrix)), inverse_(std::move(inverse)) {}

  IntMatrix matrix_;
  IntMatrix inverse_;
};

/// phi^{-t}.
UnimodularMap inverse_transpose(const UnimodularMap& phi);

/// Product of `steps` random elementary moves: transvections
/// (row_i += m * row_j, m in [-2, 2] \ {0}) and signed transpositions
/// (swap two rows, negate one). Deterministic in (n, steps, seed).
UnimodularMap random_unimodular(std::size_t n, std::size_t steps, std::uint64_t seed);

inline constexpr std::size_t kDefaultUnimodularSteps = 12;

}  // namespace latval
