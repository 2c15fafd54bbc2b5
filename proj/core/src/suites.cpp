#include "latval/suites.hpp"

#include "latval/decompositions.hpp"
#include "latval/ehrhart.hpp"
#include "latval/random.hpp"
#include "latval/unimodular.hpp"

#include <chrono>
#include <functional>

namespace latval {

namespace {

// Stream identifiers for derive_seed.
enum Stream : std::uint64_t {
  kPolytopeStream = 1,
  kSecondPolytopeStream,
  kMapStream,
  kTranslationStream,
  kShapeStream,
};

using Clock = std::chrono::steady_clock;

class Run {
 public:
  Run(std::string name, std::size_t n, std::uint64_t seed) : start_(Clock::now()) {
    report_.name = std::move(name);
    report_.dim = n;
    report_.seed = seed;
  }

  SuiteReport& report() { return report_; }

  void fail(std::string check, Json input, Json expected, Json actual) {
    report_.failures.push_back({std::move(check), std::move(input), std::move(expected), std::move(actual)});
  }

  template <class T>
  void expect_equal(const std::string& check, const Json& input, const T& expected, const T& actual) {
    ++report_.checks;
    if (!(expected == actual)) fail(check, input, to_json(expected), to_json(actual));
  }

  void expect(const std::string& check, const Json& input, bool ok, const Json& actual = nullptr) {
    ++report_.checks;
    if (!ok) fail(check, input, true, actual);
  }

  // Runs fn and turns an exception into a failure.
  void guarded(const std::string& check, const Json& input, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      ++report_.checks;
      fail(check, input, "no exception", std::string("exception: ") + e.what());
    }
  }

  SuiteReport finish() {
    report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  Clock::time_point start_;
};

void absorb(SuiteReport& into, SuiteReport&& from) {
  into.trials = std::max(into.trials, from.trials);
  into.checks += from.checks;
  into.elapsed_seconds += from.elapsed_seconds;
  for (auto& f : from.failures) into.failures.push_back(std::move(f));
  for (auto& s : from.notes) into.notes.push_back(std::move(s));
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct AffineMap {
  UnimodularMap phi;
  RationalVector z;

  Polytope operator()(const Polytope& p) const { return translate(apply_map(p, phi), z); }
  RationalVector operator()(std::span<const Rational> x) const { return add(phi.apply(x), z); }
  Json json() const { return {{"phi", matrix_json(phi.matrix())}, {"z", to_json(z)}}; }
};

AffineMap random_affine(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  UnimodularMap phi = random_unimodular(n, kDefaultUnimodularSteps, derive_seed(seed, kMapStream, index));
  Engine rng = make_engine(seed, kTranslationStream, index);
  RationalVector z;
  for (std::size_t i = 0; i < n; ++i) z.emplace_back(uniform_int(rng, -3, 3));
  return {std::move(phi), std::move(z)};
}

// A random lattice polytope for trial `index`: full-dimensional with
// n + 1 .. 2n + 2 points, or for every third trial when `allow_flat` is set,
// squashed onto x_n = 0 and moved by a unimodular map.
Polytope trial_polytope(std::size_t n, std::uint64_t seed, std::uint64_t stream, std::uint64_t index,
                        bool allow_flat = false) {
  Engine rng = make_engine(seed, kShapeStream, index * 8 + stream);
  const auto points = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(n + 1),
                                                           static_cast<std::int64_t>(2 * n + 2)));
  const std::uint64_t s = derive_seed(seed, stream, index);
  if (!allow_flat || index % 3 != 2) return random_lattice_polytope(n, kDefaultBox, points, s);
  Polytope p = random_lattice_polytope(n, kDefaultBox, points, s, false);
  std::vector<RationalVector> flat;
  for (auto v : p.vertices()) {
    v[n - 1] = 0;
    flat.push_back(std::move(v));
  }
  return apply_map(Polytope::hull(std::move(flat)), random_unimodular(n, 4, s));
}

Polytope evaluate_or_origin(const OperatorSpec& op, const std::optional<Polytope>& p, std::size_t n) {
  return evaluate(op, p, n);
}

void check_valuation(Run& run, const OperatorSpec& op, const ValuationQuadruple& q, const Json& where) {
  const std::size_t n = q.p.ambient_dim();
  Json input{{"operator", to_json(op)}, {"quadruple", to_json(q)}};
  if (!where.is_null()) input["map"] = where;
  run.guarded("valuation", input, [&] {
    const Polytope lhs = minkowski_sum(evaluate(op, q.p), evaluate(op, q.q));
    const Polytope rhs = minkowski_sum(evaluate(op, q.u), evaluate_or_origin(op, q.i, n));
    run.expect_equal("valuation", input, lhs, rhs);
  });
}

ValuationQuadruple map_quadruple(const ValuationQuadruple& q, const AffineMap& f) {
  return {q.label, f(q.p), f(q.q), f(q.u), q.i ? std::optional<Polytope>(f(*q.i)) : std::nullopt};
}

std::vector<Rational> parameter_grid() { return {Rational(0), Rational(1), Rational(2), Rational(1, 2)}; }

std::vector<OperatorSpec> equivariant_defaults() {
  std::vector<OperatorSpec> ops;
  for (const auto& a : parameter_grid())
    for (const auto& b : parameter_grid()) ops.push_back(OperatorSpec::zab(a, b));
  ops.push_back(OperatorSpec::difference());
  return ops;
}

std::vector<OperatorSpec> contravariant_defaults(std::size_t n) {
  std::vector<OperatorSpec> ops{OperatorSpec::projection(1), OperatorSpec::projection(2)};
  if (n == 2)
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {0, 1}, {2, 1}, {1, 7}})
      ops.push_back(OperatorSpec::rot_zab(a, b));
  return ops;
}

void covariance_trials(Run& run, const OperatorSpec& op, std::size_t n, std::uint64_t seed, std::size_t trials,
                       bool contravariant) {
  op.validate(n);
  for (std::size_t t = 0; t < trials; ++t) {
    const Polytope p = trial_polytope(n, seed, kPolytopeStream, t);
    const AffineMap f = random_affine(n, seed, t);
    const Json input{{"operator", to_json(op)}, {"P", to_json(p)}, {"map", f.json()}};
    run.guarded(contravariant ? "contravariance" : "equivariance", input, [&] {
      const Polytope image = evaluate(op, f(p));
      const Polytope zp = evaluate(op, p);
      const Polytope expected = apply_map(zp, contravariant ? f.phi.inverse_transpose() : f.phi);
      run.expect_equal(contravariant ? "contravariance" : "equivariance", input, expected, image);
    });
  }
}

bool has_non_integral_vertex(const Polytope& p) { return !p.is_lattice(); }

Integer lcm_up_to(std::size_t n) {
  Integer m(1);
  for (std::size_t i = 2; i <= n + 1; ++i) m = lcm(m, Integer(static_cast<long>(i)));
  return m;
}

RationalVector simplex_barycenter(std::size_t n, std::size_t k) {
  RationalVector d = zero_vector(n);
  for (std::size_t i = 0; i < k; ++i) d[i] = Rational(1, static_cast<long>(k + 1));
  return d;
}

// Expands prod (k + j) / n! over j = 1..n, and (k + 1)^n, as coefficient
// lists in k.
std::vector<Rational> binomial_poly(std::size_t n) {
  std::vector<Rational> c{Rational(1)};
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i] * Rational(static_cast<long>(j));
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  for (auto& x : c) x /= Rational(factorial(static_cast<unsigned>(n)));
  return c;
}

std::vector<Rational> cube_poly(std::size_t n) {
  std::vector<Rational> c{Rational(1)};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  return c;
}

RationalVector sum_of(const std::vector<RationalVector>& vs, std::size_t n) {
  RationalVector s = zero_vector(n);
  for (const auto& v : vs) s = add(s, v);
  return s;
}

}  // namespace

Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"check", f.check}, {"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"suite", r.name},
          {"dim", r.dim},
          {"seed", std::to_string(r.seed)},
          {"trials", r.trials},
          {"checks", r.checks},
          {"passed", r.passed()},
          {"failures", std::move(failures)},
          {"elapsed_seconds", r.elapsed_seconds},
          {"notes", r.notes}};
}

std::size_t default_trials(std::size_t n) { return n <= 2 ? 100 : n == 3 ? 40 : 10; }

Polytope random_lattice_polytope(std::size_t n, std::int64_t box, std::size_t points, std::uint64_t seed,
                                 bool full_dimensional) {
  if (n == 0) throw InputError("random_lattice_polytope: n must be positive");
  if (box < 1) throw InputError("random_lattice_polytope: box must be >= 1");
  if (points < n + 1) throw InputError("random_lattice_polytope: need at least n + 1 points");
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    Engine rng = make_engine(seed, 0, attempt);
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < points; ++i) {
      RationalVector x;
      for (std::size_t c = 0; c < n; ++c) x.emplace_back(uniform_int(rng, 0, box));
      pts.push_back(std::move(x));
    }
    Polytope p = Polytope::hull(std::move(pts));
    if (!full_dimensional || dim(p) == n) return p;
  }
  throw InputError("random_lattice_polytope: no full-dimensional sample after 100 retries");
}

std::vector<OperatorSpec> default_valuation_operators(std::size_t n) {
  std::vector<OperatorSpec> ops;
  for (const auto& a : parameter_grid())
    for (const auto& b : parameter_grid()) ops.push_back(OperatorSpec::zab(a, b));
  ops.push_back(OperatorSpec::projection(1));
  ops.push_back(OperatorSpec::projection(2));
  if (n == 2) {
    ops.push_back(OperatorSpec::rot_zab(1, 1));
    ops.push_back(OperatorSpec::rot_zab(0, 1));
  }
  return ops;
}

SuiteReport suite_valuation(const OperatorSpec& op, std::size_t n, std::uint64_t seed, std::size_t trials) {
  op.validate(n);
  Run run("valuation", n, seed);
  run.report().trials = trials;
  run.report().notes.push_back("operator " + op.describe());
  const auto library = quadruples_library(n);
  for (const auto& q : library) check_valuation(run, op, q, nullptr);
  for (std::size_t t = 0; t < trials; ++t) {
    const AffineMap f = random_affine(n, seed, t);
    check_valuation(run, op, map_quadruple(library[t % library.size()], f), f.json());
  }
  return run.finish();
}

SuiteReport suite_equivariance(const OperatorSpec& op, std::size_t n, std::uint64_t seed, std::size_t trials) {
  Run run("equivariance", n, seed);
  run.report().trials = trials;
  run.report().notes.push_back("operator " + op.describe());
  covariance_trials(run, op, n, seed, trials, false);
  return run.finish();
}

SuiteReport suite_contravariance(const OperatorSpec& op, std::size_t n, std::uint64_t seed, std::size_t trials) {
  Run run("contravariance", n, seed);
  run.report().trials = trials;
  run.report().notes.push_back("operator " + op.describe());
  covariance_trials(run, op, n, seed, trials, true);
  return run.finish();
}

SuiteReport suite_dst(std::size_t n, std::uint64_t seed, std::size_t trials) {
  Run run("dst", n, seed);
  run.report().trials = trials;

  for (std::size_t k = 1; k <= n; ++k) {
    const Polytope t = Polytope::standard_simplex(n, k);
    run.expect_equal("dst of T_k is its barycenter", to_json(t), simplex_barycenter(n, k), discrete_steiner(t));
  }
  for (const auto& q : quadruples_library(n)) {
    const Json input = to_json(q);
    run.guarded("dst is a valuation", input, [&] {
      const RationalVector lhs = add(discrete_steiner(q.p), discrete_steiner(q.q));
      const RationalVector rhs = add(discrete_steiner(q.u), q.i ? discrete_steiner(*q.i) : zero_vector(n));
      run.expect_equal("dst is a valuation", input, lhs, rhs);
    });
  }

  std::size_t symmetric_found = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Polytope p = trial_polytope(n, seed, kPolytopeStream, t, true);
    const Polytope q = trial_polytope(n, seed, kSecondPolytopeStream, t, true);
    const AffineMap f = random_affine(n, seed, t);
    const Json input{{"P", to_json(p)}, {"Q", to_json(q)}, {"map", f.json()}};
    run.guarded("dst", input, [&] {
      const RationalVector dp = discrete_steiner(p);
      run.expect_equal("dst is SL_n(Z)- and translation-equivariant", input, f(dp), discrete_steiner(f(p)));
      run.expect_equal("dst is Minkowski additive", input, add(dp, discrete_steiner(q)),
                       discrete_steiner(minkowski_sum(p, q)));

      const std::size_t k = t % n + 1;
      const Polytope simplex = f(Polytope::standard_simplex(n, k));
      run.expect("image of T_k is basic", to_json(simplex), is_basic_simplex(simplex));
      run.expect_equal("dst equals the centroid on basic simplices", to_json(simplex), centroid(simplex),
                       discrete_steiner(simplex));

      const Polytope sym = translate(difference_body(p), f.z);
      run.expect("difference body is centrally symmetric", to_json(sym), is_centrally_symmetric(sym));
      run.expect_equal("dst of a centrally symmetric polytope is its center", to_json(sym), f.z,
                       discrete_steiner(sym));
      if (is_centrally_symmetric(p)) {
        ++symmetric_found;
        const RationalVector center = scaled(add(p.vertices().front(), p.vertices().back()), Rational(1, 2));
        run.expect_equal("dst of a centrally symmetric polytope is its center", to_json(p), center,
                         discrete_steiner(p));
      }
    });
  }
  run.report().notes.push_back(std::to_string(symmetric_found) + " random samples were centrally symmetric");
  return run.finish();
}

SuiteReport suite_integrality(std::size_t n, std::uint64_t seed, std::size_t trials) {
  Run run("integrality", n, seed);
  run.report().trials = trials;
  const Integer m = lcm_up_to(n);
  const Rational mr(m);
  run.report().notes.push_back("m_n = " + to_string(m));

  std::vector<std::pair<Rational, Rational>> admissible{{0, 0}, {1, 1}, {2, 2}, {0, mr}, {1, 1 + mr}, {2 + mr, 2}};
  std::vector<std::pair<Rational, Rational>> violating{{1, 2}, {0, 1}, {2, 1}, {1, mr}};
  const Integer fact = factorial(static_cast<unsigned>(n - 1));
  std::vector<Rational> projection_ok{Rational(fact), Rational(2 * fact)};
  std::vector<Rational> projection_bad{Rational(1, 2)};
  if (fact > 1) projection_bad.push_back(Rational(fact - 1));

  for (std::size_t t = 0; t < trials; ++t) {
    const Polytope p = trial_polytope(n, seed, kPolytopeStream, t, true);
    const Json input = to_json(p);
    run.guarded("integrality", input, [&] {
      const RationalVector scaled_dst = scaled(discrete_steiner(p), mr);
      run.expect("m_n dst(P) is integral", input, is_integral(scaled_dst), to_json(scaled_dst));
      for (const auto& [a, b] : admissible) {
        const Polytope z = z_ab(p, a, b);
        run.expect("z_ab maps lattice polytopes to lattice polytopes (a=" + to_string(a) + ", b=" + to_string(b) + ")",
                   input, z.is_lattice(), to_json(z));
      }
      for (const auto& c : projection_ok) {
        const Polytope z = scale(projection_body(p), c);
        run.expect("c Pi maps lattice polytopes to lattice polytopes (c=" + to_string(c) + ")", input, z.is_lattice(),
                   to_json(z));
      }
      if (n == 2)
        for (const auto& [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {1, 7}, {7, 1}, {0, 6}}) {
          const Polytope z = contra_z_ab_2d(p, a, b);
          run.expect("rotated z_ab maps lattice polygons to lattice polygons (a=" + std::to_string(a) +
                         ", b=" + std::to_string(b) + ")",
                     input, z.is_lattice(), to_json(z));
        }
    });
  }

  // Violations must show up on one of the witnesses T_1, ..., T_n, where the
  // support of z_ab T_k in direction e_1 is a + (b - a)/(k + 1).
  auto report_witnesses = [&](const std::string& family, const std::function<Polytope(const Polytope&)>& op,
                              const std::function<std::optional<Rational>(std::size_t)>& e1_support) {
    std::string witnesses;
    for (std::size_t k = 1; k <= n; ++k) {
      const Polytope t = Polytope::standard_simplex(n, k);
      const Polytope z = op(t);
      if (auto expected = e1_support(k))
        run.expect_equal(family + ": support of the image of T_" + std::to_string(k) + " at e_1", to_json(t),
                         *expected, support(z, unit_vector(n, 0)));
      if (has_non_integral_vertex(z)) witnesses += (witnesses.empty() ? "T_" : ", T_") + std::to_string(k);
    }
    run.expect(family + " has a non-integral witness among T_1..T_n", Json(family), !witnesses.empty());
    run.report().notes.push_back(family + " witnesses: " + (witnesses.empty() ? "none" : witnesses));
  };
  for (const auto& [a, b] : violating) {
    report_witnesses("z_ab(a=" + to_string(a) + ", b=" + to_string(b) + ")",
                     [&, a = a, b = b](const Polytope& t) { return z_ab(t, a, b); },
                     [a = a, b = b](std::size_t k) -> std::optional<Rational> {
                       return a + (b - a) / Rational(static_cast<long>(k + 1));
                     });
  }
  for (const auto& c : projection_bad)
    report_witnesses("c Pi(c=" + to_string(c) + ")", [&](const Polytope& t) { return scale(projection_body(t), c); },
                     [](std::size_t) { return std::nullopt; });
  if (n == 2)
    report_witnesses("rotated z_ab(a=1, b=2)", [](const Polytope& t) { return contra_z_ab_2d(t, 1, 2); },
                     [](std::size_t) { return std::nullopt; });
  return run.finish();
}

SuiteReport suite_expansion_identities(std::size_t n, std::size_t kmax, const Rational& a, const Rational& b,
                                       const Rational& c) {
  if (kmax < 3) throw InputError("suite_expansion_identities: kmax must be >= 3");
  Run run("expansion", n, 0);
  run.report().trials = kmax;
  const Polytope cube = Polytope::unit_cube(n);
  const OperatorSpec contra = OperatorSpec::projection(c);
  const OperatorSpec equi = OperatorSpec::zab(a, b);
  const Rational half_sum = (a + b) / 2;
  const Polytope centered = centered_cube(n, half_sum);
  const Json params{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};

  run.guarded("z_ab of the unit cube", params, [&] {
    for (std::size_t m = 1; m <= n; ++m) {
      const Polytope face = Polytope::unit_cube(n, m);
      RationalVector lo = zero_vector(n);
      RationalVector hi = zero_vector(n);
      for (std::size_t i = 0; i < m; ++i) {
        lo[i] = -half_sum;
        hi[i] = half_sum;
      }
      std::vector<RationalVector> box;
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        RationalVector x = zero_vector(n);
        for (std::size_t i = 0; i < m; ++i) x[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        box.push_back(std::move(x));
      }
      run.expect_equal("z_ab [0,1]^m = [-c, c]^m", params, Polytope::hull(std::move(box)), z_ab(face, a, b));
    }
  });

  const Polytope pi_cube = projection_body(cube);
  const Polytope z_contra_cube = evaluate(contra, cube);
  const Polytope z_equi_cube = evaluate(equi, cube);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const Rational kr(static_cast<long>(k));
    Rational kn(1);
    for (std::size_t i = 0; i < n; ++i) kn *= kr;
    const Rational kn1 = kn / kr;
    const Polytope kcube = scale(cube, kr);
    Json input = params;
    input["k"] = std::to_string(k);
    run.guarded("expansion", input, [&] {
      const Polytope lhs = minkowski_sum(evaluate(contra, kcube), scale(pi_cube, c * (kn - kn1)));
      run.expect_equal("contravariant cube expansion", input, scale(z_contra_cube, kn), lhs);
      const Polytope lhs2 = minkowski_sum(evaluate(equi, kcube), scale(centered, kn));
      const Polytope rhs2 = minkowski_sum(scale(z_equi_cube, kn), scale(centered, kr));
      run.expect_equal("equivariant cube expansion", input, rhs2, lhs2);
    });
  }
  return run.finish();
}

SuiteReport suite_ehrhart(std::size_t n, std::uint64_t seed, std::size_t trials) {
  Run run("ehrhart", n, seed);
  run.report().trials = trials;
  for (std::size_t d = 1; d <= n; ++d) {
    run.expect_equal("ehrhart(T_d) = C(k + d, d)", to_json(Polytope::standard_simplex(n, d)), binomial_poly(d),
                     ehrhart(Polytope::standard_simplex(n, d)).polynomial.coefficients());
    run.expect_equal("ehrhart([0,1]^d) = (k + 1)^d", to_json(Polytope::unit_cube(n, d)), cube_poly(d),
                     ehrhart(Polytope::unit_cube(n, d)).polynomial.coefficients());
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const Polytope p = trial_polytope(n, seed, kPolytopeStream, t, true);
    const Polytope q = trial_polytope(n, seed, kSecondPolytopeStream, t, true);
    const Json input{{"P", to_json(p)}, {"Q", to_json(q)}};
    run.guarded("ehrhart", input, [&] {
      const EhrhartExpansion e = ehrhart(p);
      const std::size_t d = dim(p);
      run.expect("degree equals dim P", input, e.polynomial.degree() == static_cast<int>(d),
                 std::to_string(e.polynomial.degree()));
      run.expect_equal("L_0 = 1", input, Rational(1), e.coefficient(0));
      if (d == n) run.expect_equal("L_n = volume", input, volume(p), e.coefficient(n));
      const EhrhartExpansion twice = ehrhart(scale(p, Rational(2)));
      Rational power(1);
      for (std::size_t i = 0; i <= n; ++i, power *= 2)
        run.expect_equal("L_i(2P) = 2^i L_i(P)", input, power * e.coefficient(i), twice.coefficient(i));
      const LatticePointEnumerator en(p);
      for (std::int64_t k = static_cast<std::int64_t>(n) + 1; k <= static_cast<std::int64_t>(n) + 2; ++k)
        run.expect_equal("out-of-sample count", input, Rational(en.count(k)), e.polynomial(Rational(k)));
      run.expect("L(kP + lQ) is a polynomial of degree <= n", input, bivariate_count_check(p, q, n));
      run.expect("L_1 is Minkowski additive", input, L1_additivity_check(p, q));
    });
  }
  return run.finish();
}

SuiteReport suite_minkowski_relation(std::size_t n, std::uint64_t seed, std::size_t trials) {
  Run run("minkowski-relation", n, seed);
  run.report().trials = trials;
  std::vector<Polytope> corpus{Polytope::standard_simplex(n), Polytope::unit_cube(n)};
  for (const auto& q : quadruples_library(n))
    for (const auto& p : {q.p, q.q, q.u}) corpus.push_back(p);
  for (const auto& c : prism_triangulation(n).cells) corpus.push_back(c);
  for (const auto& c : cube_triangulation(n).cells) corpus.push_back(c);
  for (std::size_t t = 0; t < trials; ++t) corpus.push_back(trial_polytope(n, seed, kPolytopeStream, t));
  for (const auto& p : corpus) {
    if (dim(p) != n) continue;
    const Json input = to_json(p);
    run.guarded("area vectors sum to zero", input,
                [&] { run.expect_equal("area vectors sum to zero", input, zero_vector(n), sum_of(facet_area_vectors(p), n)); });
  }
  return run.finish();
}

SuiteReport suite_inclusion_exclusion(std::size_t n, std::size_t kmax) {
  Run run("inclusion-exclusion", n, 0);
  std::vector<CellDecomposition> decompositions{cube_triangulation(n), prism_triangulation(n)};
  for (std::size_t k = 1; k <= kmax; ++k) decompositions.push_back(grid_decomposition(n, k));
  run.report().trials = decompositions.size();

  for (const auto& d : decompositions) {
    const Json label{{"decomposition", d.name}, {"target", to_json(d.target)}};
    for (const auto& problem : d.validate()) run.fail("decomposition is valid", label, "valid", problem);
    ++run.report().checks;
    for (const auto& [which, name] : {std::pair{ScalarValuation::count, "L"}, std::pair{ScalarValuation::volume, "volume"},
                                      std::pair{ScalarValuation::moment, "ell"}})
      run.expect_equal(std::string("alternating face sum reproduces ") + name, label,
                       valuation_value(which, d.target), inclusion_exclusion_sum(d, which));
  }

  const auto& cube = decompositions[0];
  run.expect_equal("cube triangulation has n! cells", nullptr, Integer(factorial(static_cast<unsigned>(n))),
                   Integer(static_cast<long>(cube.cells.size())));
  bool has_tn = false;
  bool all_basic = true;
  for (const auto& c : cube.cells) {
    has_tn = has_tn || c == Polytope::standard_simplex(n);
    all_basic = all_basic && is_basic_simplex(c);
  }
  run.expect("T_n is a cell of the cube triangulation", nullptr, has_tn);
  run.expect("cube triangulation cells are basic", nullptr, all_basic);

  const auto& prism = decompositions[1];
  bool prism_basic = true;
  for (const auto& c : prism.cells) prism_basic = prism_basic && is_basic_simplex(c);
  run.expect("prism cells are basic", nullptr, prism_basic);
  run.expect("S_1 = T_n", nullptr, prism.cells.front() == Polytope::standard_simplex(n));
  std::vector<std::pair<std::size_t, std::size_t>> chain;
  for (std::size_t i = 0; i + 1 < prism.cells.size(); ++i) chain.emplace_back(i, i + 1);
  const auto adjacency = prism.adjacency();
  Json adj = Json::array();
  for (const auto& [i, j] : adjacency) adj.push_back({i, j});
  run.expect("dim(S_i ∩ S_j) = n - 1 iff j = i + 1", nullptr, adjacency == chain, adj);

  for (std::size_t k = 1; k <= kmax; ++k) {
    const auto& grid = decompositions[1 + k];
    const auto census = grid.interior_census();
    Json input{{"k", std::to_string(k)}};
    for (std::size_t m = 0; m <= n; ++m) {
      Integer expected = binomial(static_cast<unsigned>(n), static_cast<unsigned>(m));
      for (std::size_t i = 0; i < m; ++i) expected *= static_cast<long>(k);
      for (std::size_t i = m; i < n; ++i) expected *= static_cast<long>(k - 1);
      run.expect_equal("grid census of " + std::to_string(m) + "-faces", input, expected,
                       Integer(static_cast<long>(census.at(m))));
    }
    Integer per_normal(static_cast<long>(k - 1));
    for (std::size_t i = 1; i < n; ++i) per_normal *= static_cast<long>(k);
    const auto normals = grid.interior_facet_normals();
    for (std::size_t i = 0; i < n; ++i) {
      const auto it = normals.find(unit_vector(n, i));
      run.expect_equal("grid facets with normal e_" + std::to_string(i + 1), input, per_normal,
                       Integer(static_cast<long>(it == normals.end() ? 0 : it->second)));
    }
  }
  return run.finish();
}

SuiteReport suite_planar_bridge(std::uint64_t seed, std::size_t trials) {
  Run run("planar-bridge", 2, seed);
  run.report().trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const Polytope p = trial_polytope(2, seed, kPolytopeStream, t, true);
    const Json input = to_json(p);
    run.guarded("Pi = rotated difference body", input, [&] {
      run.expect_equal("Pi = rotated difference body", input, rotate90(difference_body(p)), projection_body(p));
    });
  }
  return run.finish();
}

SuiteReport suite_interior_origin(std::size_t n) {
  Run run("interior-origin", n, 0);
  run.report().notes.push_back("sanity check for the concrete operators with positive parameters");
  std::vector<OperatorSpec> ops;
  for (const auto& a : parameter_grid())
    for (const auto& b : parameter_grid())
      if (a > 0 && b > 0) ops.push_back(OperatorSpec::zab(a, b));
  ops.push_back(OperatorSpec::projection(1));
  ops.push_back(OperatorSpec::projection(2));
  for (const auto& op : ops) {
    const Polytope z = evaluate(op, Polytope::standard_simplex(n));
    const Json input = to_json(op);
    run.expect("o is an interior point of Z T_n", input,
               dim(z) == n && facet_system(z).contains_in_relative_interior(zero_vector(n)), to_json(z));
  }
  run.report().trials = ops.size();
  return run.finish();
}

std::vector<std::string> default_suite_names() {
  return {"valuation",          "equivariance",        "contravariance", "dst",           "integrality",
          "expansion",          "ehrhart",             "minkowski-relation", "inclusion-exclusion",
          "planar-bridge",      "interior-origin"};
}

std::vector<std::string> suite_names() {
  auto names = default_suite_names();
  names.push_back("control-centroid");
  names.push_back("control-flipped");
  return names;
}

std::vector<SuiteReport> run_suites(const SuiteRequest& request) {
  const std::size_t n = request.dim;
  if (n < 2 || n > 4) throw InputError("suites support dimensions 2, 3 and 4");
  const std::size_t trials = request.trials ? request.trials : default_trials(n);
  const std::uint64_t seed = request.seed;
  auto ops_or = [&](std::vector<OperatorSpec> defaults) {
    return request.op ? std::vector<OperatorSpec>{*request.op} : std::move(defaults);
  };
  auto over_ops = [&](const std::string& name, const std::vector<OperatorSpec>& ops,
                      SuiteReport (*suite)(const OperatorSpec&, std::size_t, std::uint64_t, std::size_t)) {
    SuiteReport total{name, n, seed};
    for (const auto& op : ops) absorb(total, suite(op, n, seed, trials));
    total.notes.push_back("forward direction only: uniqueness is not mechanically checked");
    return total;
  };

  const std::string& name = request.name;
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& s : default_suite_names()) {
      if (s == "planar-bridge" && n != 2) continue;
      SuiteRequest sub = request;
      sub.name = s;
      for (auto& r : run_suites(sub)) out.push_back(std::move(r));
    }
    return out;
  }
  if (name == "valuation") return {over_ops(name, ops_or(default_valuation_operators(n)), suite_valuation)};
  if (name == "equivariance") return {over_ops(name, ops_or(equivariant_defaults()), suite_equivariance)};
  if (name == "contravariance") return {over_ops(name, ops_or(contravariant_defaults(n)), suite_contravariance)};
  if (name == "dst") return {suite_dst(n, seed, trials)};
  if (name == "integrality") return {suite_integrality(n, seed, trials)};
  if (name == "ehrhart") return {suite_ehrhart(n, seed, trials)};
  if (name == "minkowski-relation") return {suite_minkowski_relation(n, seed, trials)};
  if (name == "inclusion-exclusion") return {suite_inclusion_exclusion(n, n <= 3 ? 3 : 1)};
  if (name == "interior-origin") return {suite_interior_origin(n)};
  if (name == "planar-bridge") {
    if (n != 2) throw InputError("planar-bridge is defined for dimension 2 only");
    return {suite_planar_bridge(seed, trials)};
  }
  if (name == "expansion") {
    SuiteReport total{name, n, seed};
    const std::size_t kmax = n <= 3 ? 5 : 3;
    for (const auto& [a, b, c] : std::vector<std::tuple<Rational, Rational, Rational>>{
             {1, 1, 1}, {0, 1, 2}, {2, Rational(1, 2), 1}, {1, 2, 2}})
      absorb(total, suite_expansion_identities(n, kmax, a, b, c));
    return {total};
  }
  if (name == "control-centroid") {
    SuiteReport total{name, n, seed};
    const OperatorSpec op{OperatorKind::z_ab_centroid_control, 1, 0, 0};
    absorb(total, suite_valuation(op, n, seed, trials));
    absorb(total, suite_equivariance(op, n, seed, trials));
    total.notes.push_back("negative control: expected to fail");
    return {total};
  }
  if (name == "control-flipped") {
    SuiteReport total{name, n, seed};
    const OperatorSpec op{OperatorKind::projection_flipped_control, 0, 0, 1};
    absorb(total, suite_valuation(op, n, seed, trials));
    absorb(total, suite_contravariance(op, n, seed, trials));
    total.notes.push_back("negative control: expected to fail");
    return {total};
  }
  throw UnknownSuiteError("unknown suite: " + name);
}

}  // namespace latval
