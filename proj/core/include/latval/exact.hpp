#pragma once

// Exact scalars, vectors and small dense matrices.
//
// Everything in the geometry path is built on GMP-backed integers and
// rationals; there is no floating point anywhere below this header.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latval {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Raised for malformed arguments (empty inputs, bad parameters, v = 0 ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when operands live in different ambient dimensions or a matrix has
/// the wrong shape.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a result contradicts an identity that must hold (for example
/// a nonzero constant term in a moment expansion).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Scalars

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
bool is_integer(const Rational& r);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p/q" or "p" into lowest terms. Throws InputError on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

// ---------------------------------------------------------------------------
// Vectors

RationalVector to_rational(const IntVector& v);
bool is_integral(std::span<const Rational> v);
IntVector to_integer(std::span<const Rational> v);  // throws unless integral

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RationalVector add(std::span<const Rational> a, std::span<const Rational> b);
RationalVector sub(std::span<const Rational> a, std::span<const Rational> b);
RationalVector scaled(std::span<const Rational> a, const Rational& t);
bool is_zero(std::span<const Rational> v);
RationalVector zero_vector(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);

/// Scales a nonzero rational vector to the primitive integer vector pointing
/// the same way.
RationalVector primitive(std::span<const Rational> v);

// ---------------------------------------------------------------------------
// Matrices

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntMatrix& m);
RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v);
RationalVector multiply(const IntMatrix& m, std::span<const Rational> v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);
Rational det(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Exact solution of A x = b, or nullopt when A is singular.
std::optional<RationalVector> solve_linear(const RationalMatrix& a, std::span<const Rational> b);

/// Basis of {x : A x = 0}, one primitive integer vector per basis element.
std::vector<RationalVector> nullspace(const RationalMatrix& a);

/// Generalized cross product of n-1 vectors in Q^n: the vector c with
/// c . y = det(rows..., y) for all y.
RationalVector cross(std::span<const RationalVector> rows);

}  // namespace latval
