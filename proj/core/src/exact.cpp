#include "latval/exact.hpp"

#include <algorithm>
#include <cctype>

namespace latval {

Integer floor(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

Integer ceil(const Rational& r) { return -floor(-r); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

Integer factorial(unsigned n) {
  Integer f(1);
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  Integer b(1);
  for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw InputError("malformed rational: '" + std::string(whole) + "'");
  std::string digits(text);
  if (digits.front() == '+') digits.erase(digits.begin());
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);  // normalizes sign and common factors
}

RationalVector to_rational(const IntVector& v) { return RationalVector(v.begin(), v.end()); }

bool is_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

IntVector to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integer(x)) throw InputError("vector is not integral");
    out.push_back(numerator(x));
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

RationalVector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  RationalVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RationalVector sub(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  RationalVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

RationalVector scaled(std::span<const Rational> a, const Rational& t) {
  RationalVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * t;
  return c;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n, Rational(0)); }

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector e(n, Rational(0));
  e.at(i) = 1;
  return e;
}

RationalVector primitive(std::span<const Rational> v) {
  Integer den(1);
  for (const auto& x : v) den = lcm(den, denominator(x));
  Integer g(0);
  for (const auto& x : v) g = gcd(g, numerator(x * den));
  if (g == 0) throw InputError("primitive: zero vector");
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(numerator(v[i] * den) / g);
  return out;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), v);
  return out;
}

RationalVector multiply(const IntMatrix& m, std::span<const Rational> v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && v[j] != 0) out[i] += Rational(m(i, j)) * v[j];
  return out;
}

Integer det(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw DimensionError("det: matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = input;
  Integer sign(1);
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational det(const RationalMatrix& input) {
  if (input.rows() != input.cols()) throw DimensionError("det: matrix is not square");
  const std::size_t n = input.rows();
  RationalMatrix m = input;
  Rational d(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      m.swap_rows(k, p);
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& input) {
  RationalMatrix m = input;
  return rref(m).size();
}

std::optional<RationalVector> solve_linear(const RationalMatrix& a, std::span<const Rational> b) {
  if (a.rows() != a.cols()) throw DimensionError("solve_linear: matrix is not square");
  if (b.size() != a.rows()) throw DimensionError("solve_linear: rhs length mismatch");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  RationalMatrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(primitive(v));
  }
  return basis;
}

RationalVector cross(std::span<const RationalVector> rows) {
  const std::size_t n = rows.size() + 1;
  RationalVector c(n);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (rows[i].size() != n) throw DimensionError("cross: need n-1 vectors in Q^n");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = j == k ? 1 : 0;
    c[k] = det(m);
  }
  return c;
}

}  // namespace latval
