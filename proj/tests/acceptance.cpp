// Runs every acceptance criterion at full size and prints one PASS/FAIL line
// per criterion. Exit status is nonzero if any criterion fails.

#include "latval/decompositions.hpp"
#include "latval/ehrhart.hpp"
#include "latval/operators.hpp"
#include "latval/random.hpp"
#include "latval/suites.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace latval;

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail << "first failure: " << what << "; ";
      passed = false;
    }
  }
  void absorb(const SuiteReport& r) {
    if (!r.passed()) {
      std::string first = r.failures.empty() ? "" : r.failures.front().check;
      require(false, r.name + " n=" + std::to_string(r.dim) + " (" + first + ")");
    }
    checks += r.checks;
  }
  std::size_t checks = 0;
};

// Coefficients of prod_i (k + r_i), lowest degree first.
std::vector<Rational> expand_product(const std::vector<Rational>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i] * r;
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  return c;
}

void ehrhart_golden(Outcome& o) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Rational> simplex_roots;
    Rational n_factorial(1);
    for (std::size_t i = 1; i <= n; ++i) {
      simplex_roots.emplace_back(static_cast<long>(i));
      n_factorial *= static_cast<long>(i);
    }
    std::vector<Rational> simplex = expand_product(simplex_roots);
    for (auto& x : simplex) x /= n_factorial;
    const std::vector<Rational> cube = expand_product(std::vector<Rational>(n, Rational(1)));
    o.require(ehrhart(Polytope::standard_simplex(n)).coefficients() == simplex, "ehrhart(T_" + std::to_string(n) + ")");
    o.require(ehrhart(Polytope::unit_cube(n)).coefficients() == cube, "ehrhart([0,1]^" + std::to_string(n) + ")");
    o.checks += 2;
  }
}

// Lattice polytope symmetric about z / 2 with z integral.
std::pair<Polytope, RationalVector> random_symmetric(std::size_t n, std::uint64_t seed) {
  Engine rng = make_engine(kSeed, 31, seed);
  RationalVector twice_center(n);
  for (auto& x : twice_center) x = Rational(uniform_int(rng, -3, 3));
  std::vector<RationalVector> pts;
  const std::size_t count = n + 1 + static_cast<std::size_t>(uniform_int(rng, 0, 3));
  for (std::size_t i = 0; i < count; ++i) {
    RationalVector x(n);
    for (auto& c : x) c = Rational(uniform_int(rng, -3, 3));
    pts.push_back(sub(twice_center, x));
    pts.push_back(std::move(x));
  }
  return {Polytope::hull(std::move(pts)), scaled(twice_center, Rational(1, 2))};
}

void discrete_steiner_point(Outcome& o) {
  for (std::size_t n = 2; n <= 3; ++n) {
    RationalVector barycenter(n, Rational(1, static_cast<long>(n + 1)));
    o.require(discrete_steiner(Polytope::standard_simplex(n)) == barycenter, "dst(T_n)");
    ++o.checks;

    std::vector<std::pair<Polytope, RationalVector>> symmetric;
    symmetric.emplace_back(centered_cube(n, Rational(1)), zero_vector(n));
    symmetric.emplace_back(Polytope::unit_cube(n), RationalVector(n, Rational(1, 2)));
    for (std::uint64_t t = 0; t < 100; ++t) symmetric.push_back(random_symmetric(n, t * 4 + n));
    for (const auto& [p, center] : symmetric) {
      o.require(discrete_steiner(p) == center, "dst of a centrally symmetric polytope");
      ++o.checks;
    }

    for (std::uint64_t t = 0; t < 100; ++t) {
      const Polytope p = random_lattice_polytope(n, kDefaultBox, n + 2, derive_seed(kSeed, 1, t));
      const Polytope q = random_lattice_polytope(n, kDefaultBox, n + 2, derive_seed(kSeed, 2, t));
      o.require(discrete_steiner(minkowski_sum(p, q)) == add(discrete_steiner(p), discrete_steiner(q)),
                "dst additivity");
      ++o.checks;
    }
  }
}

void dst_forward(Outcome& o) {
  for (std::size_t n = 2; n <= 3; ++n) o.absorb(suite_dst(n, kSeed, 50));
}

void classification_valuations(Outcome& o) {
  const std::vector<Rational> grid{Rational(0), Rational(1), Rational(2), Rational(1, 2)};
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& a : grid)
      for (const auto& b : grid) o.absorb(suite_valuation(OperatorSpec::zab(a, b), n, kSeed, 0));
    for (long c : {1, 2}) o.absorb(suite_valuation(OperatorSpec::projection(Rational(c)), n, kSeed, 0));
  }
}

void covariance(Outcome& o) {
  const std::vector<Rational> grid{Rational(0), Rational(1), Rational(2), Rational(1, 2)};
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& a : grid)
      for (const auto& b : grid) o.absorb(suite_equivariance(OperatorSpec::zab(a, b), n, kSeed, 50));
    o.absorb(suite_contravariance(OperatorSpec::projection(), n, kSeed, 50));
  }
  o.absorb(suite_planar_bridge(kSeed, 100));
}

void expansion(Outcome& o) {
  const std::vector<Rational> grid{Rational(0), Rational(1), Rational(2), Rational(1, 2)};
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& a : grid)
      for (const auto& b : grid)
        for (long c : {1, 2}) o.absorb(suite_expansion_identities(n, 5, a, b, Rational(c)));
}

void integrality(Outcome& o) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const SuiteReport r = suite_integrality(n, kSeed, 100);
    o.absorb(r);
    o.require(r.trials >= 100, "trial count");
  }
  // m_n is attained: T_1 needs the factor 2, T_2 the factor 3, T_3 the factor 4.
  const RationalVector dst1 = discrete_steiner(Polytope::standard_simplex(2, 1));
  const RationalVector dst2 = discrete_steiner(Polytope::standard_simplex(2));
  o.require(is_integral(scaled(dst1, Rational(6))) && is_integral(scaled(dst2, Rational(6))) &&
                !is_integral(scaled(dst1, Rational(3))) && !is_integral(scaled(dst2, Rational(2))),
            "m_2 = 6");
  const RationalVector dst3 = discrete_steiner(Polytope::standard_simplex(3));
  const RationalVector dst3_face = discrete_steiner(Polytope::standard_simplex(3, 2));
  o.require(is_integral(scaled(dst3, Rational(12))) && !is_integral(scaled(dst3, Rational(6))) &&
                !is_integral(scaled(dst3_face, Rational(4))),
            "m_3 = 12");
  // Witness: Z_{1,2} T_2 has the non-lattice support value 1 + 1/3 in direction e_1.
  const Polytope witness = z_ab(Polytope::standard_simplex(2), 1, 2);
  o.require(!witness.is_lattice(), "Z_{1,2} T_2 is not a lattice polytope");
  o.require(support(witness, RationalVector{Rational(1), Rational(0)}) == Rational(4, 3), "witness support value");
  for (std::uint64_t t = 0; t < 100; ++t) {
    const Polytope p = random_lattice_polytope(3, kDefaultBox, 5, derive_seed(kSeed, 3, t));
    o.require(scale(projection_body(p), Rational(2)).is_lattice(), "2 Pi P is a lattice polytope at n = 3");
  }
  o.checks += 104;
}

void inclusion_exclusion(Outcome& o) {
  for (std::size_t n = 2; n <= 3; ++n) o.absorb(suite_inclusion_exclusion(n, 3));
}

void minkowski_relation(Outcome& o) {
  for (std::size_t n = 2; n <= 3; ++n) o.absorb(suite_minkowski_relation(n, kSeed, 100));
  o.absorb(suite_minkowski_relation(4, kSeed, 20));
}

void negative_controls(Outcome& o) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const char* name : {"control-centroid", "control-flipped"}) {
      bool any_failed = false;
      for (const auto& r : run_suites({name, n, kSeed, 20, std::nullopt})) {
        any_failed = any_failed || !r.passed();
        o.checks += r.checks;
      }
      o.require(any_failed, std::string(name) + " was not caught at n = " + std::to_string(n));
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"ehrhart golden values", ehrhart_golden},
      {"discrete Steiner point", discrete_steiner_point},
      {"dst equivariance and valuation", dst_forward},
      {"classification operators are Minkowski valuations", classification_valuations},
      {"equivariance and contravariance", covariance},
      {"cube expansion identities", expansion},
      {"integrality", integrality},
      {"inclusion-exclusion", inclusion_exclusion},
      {"Minkowski relation", minkowski_relation},
      {"negative controls", negative_controls},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << " (checks=" << o.checks
              << ", " << secs << "s) " << o.detail.str() << std::endl;
    if (!o.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
