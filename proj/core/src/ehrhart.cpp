#include "latval/ehrhart.hpp"

#include <limits>

namespace latval {

namespace {

constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 30;
constexpr long double kBoxLimit = 4.0e9L;

std::int64_t to_i64(const Integer& z) {
  if (abs(z) > Integer(std::numeric_limits<std::int64_t>::max() / 4))
    throw InputError("lattice enumeration: value out of range");
  return z.convert_to<std::int64_t>();
}

Integer to_integer(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  Integer z(static_cast<std::uint64_t>(u >> 64));
  z <<= 64;
  z += Integer(static_cast<std::uint64_t>(u));
  return negative ? Integer(-z) : z;
}

// floor(a / b), b > 0
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

LatticePointEnumerator::LatticePointEnumerator(const Polytope& p) : n_(p.ambient_dim()) {
  const HalfspaceSystem h = facet_system(p);
  auto convert = [](const Halfspace& hs) {
    Row row;
    for (const auto& a : hs.normal) {
      const std::int64_t v = to_i64(numerator(a));
      if (v >= kCoordinateLimit || v <= -kCoordinateLimit) throw InputError("lattice enumeration: normal too large");
      row.normal.push_back(v);
    }
    row.offset = hs.offset;
    return row;
  };
  for (const auto& hs : h.inequalities) inequalities_.push_back(convert(hs));
  for (const auto& hs : h.equations) equations_.push_back(convert(hs));
  lower_ = p.vertices().front();
  upper_ = p.vertices().front();
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < n_; ++i) {
      lower_[i] = std::min(lower_[i], v[i]);
      upper_[i] = std::max(upper_[i], v[i]);
    }
}

void LatticePointEnumerator::for_each_run(
    std::int64_t k, const std::function<void(std::span<const std::int64_t>, std::int64_t, std::int64_t)>& visit) const {
  if (k < 0) throw InputError("lattice enumeration: negative dilation factor");
  const Rational kr(k);
  std::vector<std::int64_t> lo(n_), hi(n_);
  long double box = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    lo[i] = to_i64(ceil(kr * lower_[i]));
    hi[i] = to_i64(floor(kr * upper_[i]));
    if (lo[i] > hi[i]) return;
    if (lo[i] <= -kCoordinateLimit || hi[i] >= kCoordinateLimit)
      throw InputError("lattice enumeration: coordinates too large");
    if (i + 1 < n_) box *= static_cast<long double>(hi[i] - lo[i] + 1);
  }
  if (box > kBoxLimit) throw InputError("lattice enumeration: bounding box too large");

  // Integer right-hand sides for kP: a.x <= floor(k b); a.x = k b needs k b integral.
  std::vector<std::int64_t> ineq_rhs;
  for (const auto& row : inequalities_) ineq_rhs.push_back(to_i64(floor(kr * row.offset)));
  std::vector<std::int64_t> eq_rhs;
  for (const auto& row : equations_) {
    const Rational b = kr * row.offset;
    if (!is_integer(b)) return;
    eq_rhs.push_back(to_i64(numerator(b)));
  }

  const std::size_t last = n_ - 1;
  std::vector<std::int64_t> x(lo.begin(), lo.end());
  for (;;) {
    // Range of the last coordinate given the prefix.
    std::int64_t run_lo = lo[last];
    std::int64_t run_hi = hi[last];
    bool ok = true;
    auto partial = [&](const std::vector<std::int64_t>& a) {
      __int128 s = 0;
      for (std::size_t i = 0; i < last; ++i) s += static_cast<__int128>(a[i]) * x[i];
      return s;
    };
    for (std::size_t r = 0; r < equations_.size() && ok; ++r) {
      const auto& a = equations_[r].normal;
      const __int128 rest = static_cast<__int128>(eq_rhs[r]) - partial(a);
      if (a[last] == 0) {
        ok = rest == 0;
      } else {
        if (rest % a[last] != 0) {
          ok = false;
        } else {
          const auto v = static_cast<std::int64_t>(rest / a[last]);
          run_lo = std::max(run_lo, v);
          run_hi = std::min(run_hi, v);
        }
      }
    }
    for (std::size_t r = 0; r < inequalities_.size() && ok; ++r) {
      const auto& a = inequalities_[r].normal;
      const auto rest = static_cast<std::int64_t>(static_cast<__int128>(ineq_rhs[r]) - partial(a));
      if (a[last] == 0) {
        ok = rest >= 0;
      } else if (a[last] > 0) {
        run_hi = std::min(run_hi, floor_div(rest, a[last]));
      } else {
        run_lo = std::max(run_lo, ceil_div(-rest, -a[last]));
      }
    }
    if (ok && run_lo <= run_hi) visit(std::span<const std::int64_t>(x.data(), last), run_lo, run_hi);

    // Odometer over the prefix.
    std::size_t i = last;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return;
    }
    if (last == 0) return;
  }
}

void LatticePointEnumerator::for_each(std::int64_t k,
                                      const std::function<void(std::span<const std::int64_t>)>& visit) const {
  std::vector<std::int64_t> point(n_);
  for_each_run(k, [&](std::span<const std::int64_t> prefix, std::int64_t lo, std::int64_t hi) {
    std::copy(prefix.begin(), prefix.end(), point.begin());
    for (std::int64_t t = lo; t <= hi; ++t) {
      point[n_ - 1] = t;
      visit(point);
    }
  });
}

Integer LatticePointEnumerator::count(std::int64_t k) const {
  __int128 total = 0;
  for_each_run(k, [&](std::span<const std::int64_t>, std::int64_t lo, std::int64_t hi) { total += hi - lo + 1; });
  return to_integer(total);
}

IntVector LatticePointEnumerator::moment(std::int64_t k) const {
  std::vector<__int128> sum(n_, 0);
  for_each_run(k, [&](std::span<const std::int64_t> prefix, std::int64_t lo, std::int64_t hi) {
    const __int128 len = hi - lo + 1;
    for (std::size_t i = 0; i < prefix.size(); ++i) sum[i] += len * prefix[i];
    sum[n_ - 1] += (static_cast<__int128>(lo) + hi) * len / 2;
  });
  IntVector out;
  for (auto s : sum) out.push_back(to_integer(s));
  return out;
}

std::vector<IntVector> enumerate_lattice_points(const Polytope& p) {
  std::vector<IntVector> out;
  LatticePointEnumerator(p).for_each(1, [&](std::span<const std::int64_t> x) {
    IntVector v;
    for (auto c : x) v.emplace_back(c);
    out.push_back(std::move(v));
  });
  return out;
}

Integer count(const Polytope& p) { return LatticePointEnumerator(p).count(1); }

Integer count(const std::optional<Polytope>& p) { return p ? count(*p) : Integer(0); }

IntVector discrete_moment(const Polytope& p) { return LatticePointEnumerator(p).moment(1); }

IntVector discrete_moment(const std::optional<Polytope>& p, std::size_t n) {
  return p ? discrete_moment(*p) : IntVector(n, Integer(0));
}

std::vector<Rational> EhrhartExpansion::coefficients() const {
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= polytope.ambient_dim(); ++i) c.push_back(coefficient(i));
  return c;
}

std::vector<RationalVector> MomentExpansion::coefficients() const {
  std::vector<RationalVector> c;
  for (std::size_t i = 0; i <= polytope.ambient_dim() + 1; ++i) c.push_back(coefficient(i));
  return c;
}

EhrhartExpansion ehrhart(const Polytope& p) {
  if (!p.is_lattice()) throw InputError("ehrhart: polytope is not a lattice polytope");
  const LatticePointEnumerator enumerator(p);
  std::vector<std::pair<Integer, Rational>> samples;
  for (std::size_t k = 0; k <= p.ambient_dim(); ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    samples.emplace_back(Integer(kk), Rational(enumerator.count(kk)));
  }
  EhrhartExpansion e{p, lagrange_interpolate(samples)};
  if (e.polynomial.degree() != static_cast<int>(dim(p)))
    throw ConsistencyError("ehrhart: polynomial degree differs from dim P");
  return e;
}

MomentExpansion moment_expansion(const Polytope& p) {
  if (!p.is_lattice()) throw InputError("moment_expansion: polytope is not a lattice polytope");
  const std::size_t n = p.ambient_dim();
  const LatticePointEnumerator enumerator(p);
  std::vector<IntVector> values;
  for (std::size_t k = 0; k <= n + 1; ++k) values.push_back(enumerator.moment(static_cast<std::int64_t>(k)));
  std::vector<ExactPolynomial> coords;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::pair<Integer, Rational>> samples;
    for (std::size_t k = 0; k <= n + 1; ++k) samples.emplace_back(Integer(static_cast<long>(k)), Rational(values[k][j]));
    coords.push_back(lagrange_interpolate(samples));
  }
  MomentExpansion m{p, VectorPolynomial(std::move(coords))};
  if (!is_zero(m.coefficient(0))) throw ConsistencyError("moment_expansion: nonzero constant term");
  return m;
}

RationalVector discrete_steiner(const Polytope& p) { return moment_expansion(p).coefficient(1); }

bool bivariate_count_check(const Polytope& p, const Polytope& q, std::size_t degree_bound) {
  if (degree_bound < p.ambient_dim()) throw InputError("bivariate_count_check: degree bound below n");
  const std::size_t d = degree_bound;
  auto sample = [&](std::size_t k, std::size_t l) {
    const Polytope s = minkowski_sum(scale(p, Rational(static_cast<long>(k))), scale(q, Rational(static_cast<long>(l))));
    return Rational(count(s));
  };
  // Monomials k^i l^j with i + j <= d; the triangular grid is unisolvent.
  std::vector<std::pair<std::size_t, std::size_t>> monomials;
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; i + j <= d; ++j) monomials.emplace_back(i, j);
  const std::size_t m = monomials.size();
  RationalMatrix a(m, m);
  RationalVector b(m);
  auto power = [](std::size_t base, std::size_t e) {
    Rational r(1);
    for (std::size_t t = 0; t < e; ++t) r *= Rational(static_cast<long>(base));
    return r;
  };
  for (std::size_t r = 0; r < m; ++r) {
    const auto [k, l] = monomials[r];
    for (std::size_t c = 0; c < m; ++c) a(r, c) = power(k, monomials[c].first) * power(l, monomials[c].second);
    b[r] = sample(k, l);
  }
  const auto coeffs = solve_linear(a, b);
  if (!coeffs) throw ConsistencyError("bivariate_count_check: interpolation system singular");
  auto evaluate = [&](std::size_t k, std::size_t l) {
    Rational s(0);
    for (std::size_t c = 0; c < m; ++c) s += (*coeffs)[c] * power(k, monomials[c].first) * power(l, monomials[c].second);
    return s;
  };
  for (std::size_t k = 0; k <= d; ++k)
    for (std::size_t l = 0; l <= d; ++l)
      if (k + l > d && evaluate(k, l) != sample(k, l)) return false;
  const std::pair<std::size_t, std::size_t> outside[] = {{d + 1, 0}, {0, d + 1}, {d + 1, 1}};
  for (const auto& [k, l] : outside)
    if (evaluate(k, l) != sample(k, l)) return false;
  return true;
}

bool L1_additivity_check(const Polytope& p, const Polytope& q) {
  return ehrhart(minkowski_sum(p, q)).coefficient(1) == ehrhart(p).coefficient(1) + ehrhart(q).coefficient(1);
}

}  // namespace latval
