#include "latval/unimodular.hpp"

#include "latval/random.hpp"

namespace latval {

namespace {

// Integer inverse via the adjugate; valid because det = 1.
IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const Integer cof = det(minor);
      adj(j, i) = (i + j) % 2 == 0 ? cof : Integer(-cof);
    }
  return adj;
}

}  // namespace

UnimodularMap::UnimodularMap(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw DimensionError("unimodular map must be a nonempty square matrix");
  if (det(matrix_) != 1) throw InputError("matrix does not have determinant 1");
  inverse_ = adjugate(matrix_);
}

UnimodularMap UnimodularMap::identity(std::size_t n) { return UnimodularMap(IntMatrix::identity(n)); }

UnimodularMap inverse_transpose(const UnimodularMap& phi) { return phi.inverse_transpose(); }

UnimodularMap random_unimodular(std::size_t n, std::size_t steps, std::uint64_t seed) {
  if (n < 2) throw InputError("random_unimodular: need n >= 2");
  if (steps < 1) throw InputError("random_unimodular: need steps >= 1");
  Engine rng = make_engine(seed, /*stream=*/0x756e696dULL);
  IntMatrix m = IntMatrix::identity(n);
  IntMatrix inv = IntMatrix::identity(n);
  const auto last = static_cast<std::int64_t>(n) - 1;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform_int(rng, 0, last));
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, last - 1));
    if (j >= i) ++j;
    if (uniform_int(rng, 0, 3) != 0) {
      std::int64_t mult = uniform_int(rng, -2, 1);
      if (mult >= 0) ++mult;
      // E = I + mult * e_i e_j^T, E^{-1} = I - mult * e_i e_j^T.
      for (std::size_t c = 0; c < n; ++c) m(i, c) += mult * m(j, c);
      for (std::size_t r = 0; r < n; ++r) inv(r, j) -= mult * inv(r, i);
    } else {
      // Swap rows i, j and negate the new row i: det stays 1.
      m.swap_rows(i, j);
      for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
      // inv * S * N: swap columns i, j, then negate column i.
      for (std::size_t r = 0; r < n; ++r) std::swap(inv(r, i), inv(r, j));
      for (std::size_t r = 0; r < n; ++r) inv(r, i) = -inv(r, i);
    }
  }
  UnimodularMap phi(m);
  if (!(phi.inverse_matrix() == inv)) throw ConsistencyError("random_unimodular: inverse bookkeeping drifted");
  return phi;
}

}  // namespace latval
