#pragma once

#include "latval/exact.hpp"

#include <utility>
#include <vector>

namespace latval {

/// Univariate polynomial with rational coefficients, indexed by degree.
/// The highest stored coefficient is nonzero; the zero polynomial stores none.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  /// Coefficient of k^i; zero past the degree.
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& k) const;

  friend ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q);
  friend ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q);
  friend bool operator==(const ExactPolynomial& p, const ExactPolynomial& q) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// One polynomial per coordinate.
class VectorPolynomial {
 public:
  VectorPolynomial() = default;
  explicit VectorPolynomial(std::vector<ExactPolynomial> coordinates)
      : coordinates_(std::move(coordinates)) {}

  std::size_t dim() const { return coordinates_.size(); }
  int degree() const;
  const ExactPolynomial& coordinate(std::size_t j) const { return coordinates_.at(j); }

  /// Vector coefficient of k^i.
  RationalVector coefficient(std::size_t i) const;
  RationalVector operator()(const Rational& k) const;

 private:
  std::vector<ExactPolynomial> coordinates_;
};

/// The unique polynomial of degree < samples.size() through the given
/// (k, value) pairs, by Lagrange's formula. Throws InputError on repeated
/// abscissae.
ExactPolynomial lagrange_interpolate(const std::vector<std::pair<Integer, Rational>>& samples);

}  // namespace latval
