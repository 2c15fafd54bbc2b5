#include "latval/lp.hpp"

#include <vector>

namespace latval {

Feasibility find_nonnegative_solution(const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw DimensionError("feasibility: rhs length mismatch");

  // Tableau [A | I | b] with artificial basis; rows flipped so b >= 0.
  const std::size_t width = n + m + 1;
  RationalMatrix t(m, width);
  std::vector<int> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = sign[i] > 0 ? a(i, j) : -a(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = sign[i] > 0 ? b[i] : -b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  auto is_artificial = [n](std::size_t col) { return col >= n; };

  for (;;) {
    // Phase-one reduced costs: entering candidates are columns whose sum over
    // artificial-basic rows is positive.
    std::size_t entering = width;
    for (std::size_t j = 0; j < n + m && entering == width; ++j) {
      bool in_basis = false;
      for (auto bcol : basis) in_basis = in_basis || bcol == j;
      if (in_basis) continue;
      Rational r(0);
      for (std::size_t i = 0; i < m; ++i)
        if (is_artificial(basis[i])) r += t(i, j);
      if (is_artificial(j)) r -= 1;
      if (r > 0) entering = j;
    }
    if (entering == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, entering) <= 0) continue;
      const Rational ratio = t(i, n + m) / t(i, entering);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen for a phase-one objective bounded below by 0

    const Rational inv = 1 / t(leave, entering);
    for (std::size_t j = 0; j < width; ++j)
      if (t(leave, j) != 0) t(leave, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t(i, entering) == 0) continue;
      const Rational f = t(i, entering);
      for (std::size_t j = 0; j < width; ++j)
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = entering;
  }

  Rational infeasibility(0);
  for (std::size_t i = 0; i < m; ++i)
    if (is_artificial(basis[i])) infeasibility += t(i, n + m);

  Feasibility out;
  if (infeasibility == 0) {
    RationalVector x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (!is_artificial(basis[i])) x[basis[i]] = t(i, n + m);
    out.solution = std::move(x);
    return out;
  }
  // y = c_B B^{-1}; B^{-1} sits in the artificial block of the tableau.
  out.certificate.assign(m, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    Rational y(0);
    for (std::size_t i = 0; i < m; ++i)
      if (is_artificial(basis[i])) y += t(i, n + k);
    out.certificate[k] = sign[k] > 0 ? y : -y;
  }
  return out;
}

bool has_solution(const RationalMatrix& a_le, std::span<const Rational> b_le,
                  const RationalMatrix& a_eq, std::span<const Rational> b_eq) {
  const std::size_t n = a_le.rows() > 0 ? a_le.cols() : a_eq.cols();
  if (a_le.rows() > 0 && a_eq.rows() > 0 && a_le.cols() != a_eq.cols())
    throw DimensionError("has_solution: column mismatch");
  const std::size_t rows = a_le.rows() + a_eq.rows();
  if (rows == 0) return true;
  // x = x+ - x-, plus one slack per inequality.
  const std::size_t cols = 2 * n + a_le.rows();
  RationalMatrix a(rows, cols);
  RationalVector b(rows);
  for (std::size_t i = 0; i < a_le.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = a_le(i, j);
      a(i, n + j) = -a_le(i, j);
    }
    a(i, 2 * n + i) = 1;
    b[i] = b_le[i];
  }
  for (std::size_t i = 0; i < a_eq.rows(); ++i) {
    const std::size_t r = a_le.rows() + i;
    for (std::size_t j = 0; j < n; ++j) {
      a(r, j) = a_eq(i, j);
      a(r, n + j) = -a_eq(i, j);
    }
    b[r] = b_eq[i];
  }
  return find_nonnegative_solution(a, b).feasible();
}

}  // namespace latval
