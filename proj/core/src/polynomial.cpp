#include "latval/polynomial.hpp"

#include <algorithm>

namespace latval {

ExactPolynomial::ExactPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational ExactPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Rational ExactPolynomial::operator()(const Rational& k) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q) {
  std::vector<Rational> c(std::max(p.coefficients_.size(), q.coefficients_.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coefficient(i) + q.coefficient(i);
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> c(p.coefficients_.size() + q.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < q.coefficients_.size(); ++j)
      c[i + j] += p.coefficients_[i] * q.coefficients_[j];
  return ExactPolynomial(std::move(c));
}

int VectorPolynomial::degree() const {
  int d = -1;
  for (const auto& p : coordinates_) d = std::max(d, p.degree());
  return d;
}

RationalVector VectorPolynomial::coefficient(std::size_t i) const {
  RationalVector v;
  v.reserve(coordinates_.size());
  for (const auto& p : coordinates_) v.push_back(p.coefficient(i));
  return v;
}

RationalVector VectorPolynomial::operator()(const Rational& k) const {
  RationalVector v;
  v.reserve(coordinates_.size());
  for (const auto& p : coordinates_) v.push_back(p(k));
  return v;
}

ExactPolynomial lagrange_interpolate(const std::vector<std::pair<Integer, Rational>>& samples) {
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw InputError("lagrange_interpolate: duplicate abscissa " + to_string(samples[i].first));

  ExactPolynomial result;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].second == 0) continue;
    // basis_i(k) = prod_{j != i} (k - k_j) / (k_i - k_j)
    ExactPolynomial basis({Rational(1)});
    Rational denom(1);
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == i) continue;
      basis = basis * ExactPolynomial({Rational(-samples[j].first), Rational(1)});
      denom *= Rational(samples[i].first - samples[j].first);
    }
    result = result + basis * ExactPolynomial({samples[i].second / denom});
  }
  return result;
}

}  // namespace latval
