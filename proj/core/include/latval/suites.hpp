#pragma once

// Seeded property suites. Every suite is deterministic in (dim, seed,
// trials); trial t draws its randomness from streams derived from
// (seed, t), so a failure's recorded input can be replayed on its own.
//
// Only forward directions are checked: that the operators are valuations and
// covariant, plus the computational waypoints of the uniqueness arguments
// (expansion identities, integrality witnesses).

#include "latval/json.hpp"
#include "latval/operators.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latval {

struct SuiteFailure {
  std::string check;
  Json input;
  Json expected;
  Json actual;
};

struct SuiteReport {
  std::string name;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<SuiteFailure> failures;
  double elapsed_seconds = 0;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

Json to_json(const SuiteReport& r);

class UnknownSuiteError : public InputError {
 public:
  using InputError::InputError;
};

inline constexpr std::int64_t kDefaultBox = 4;

/// 100 for n = 2, 40 for n = 3, 10 otherwise.
std::size_t default_trials(std::size_t n);

/// Hull of `points` integer points drawn uniformly from [0, box]^n, redrawn
/// (up to 100 times) until full-dimensional if requested.
Polytope random_lattice_polytope(std::size_t n, std::int64_t box, std::size_t points, std::uint64_t seed,
                                 bool full_dimensional = true);

/// The classified operators checked by default: z_ab for a, b in
/// {0, 1, 2, 1/2}, c Pi for c in {1, 2}, and in the plane the rotated z_ab.
std::vector<OperatorSpec> default_valuation_operators(std::size_t n);

SuiteReport suite_valuation(const OperatorSpec& op, std::size_t n, std::uint64_t seed, std::size_t trials);
SuiteReport suite_equivariance(const OperatorSpec& op, std::size_t n, std::uint64_t seed, std::size_t trials);
SuiteReport suite_contravariance(const OperatorSpec& op, std::size_t n, std::uint64_t seed, std::size_t trials);
SuiteReport suite_dst(std::size_t n, std::uint64_t seed, std::size_t trials);
SuiteReport suite_integrality(std::size_t n, std::uint64_t seed, std::size_t trials);
SuiteReport suite_expansion_identities(std::size_t n, std::size_t kmax, const Rational& a, const Rational& b,
                                       const Rational& c);
SuiteReport suite_ehrhart(std::size_t n, std::uint64_t seed, std::size_t trials);
SuiteReport suite_minkowski_relation(std::size_t n, std::uint64_t seed, std::size_t trials);
SuiteReport suite_inclusion_exclusion(std::size_t n, std::size_t kmax);
SuiteReport suite_planar_bridge(std::uint64_t seed, std::size_t trials);
SuiteReport suite_interior_origin(std::size_t n);

struct SuiteRequest {
  std::string name;  // a suite name or "all"
  std::size_t dim = 2;
  std::uint64_t seed = 1;
  std::size_t trials = 0;  // 0 selects default_trials(dim)
  std::optional<OperatorSpec> op;  // restricts valuation / covariance suites to one operator
};

/// Names accepted by run_suites, besides "all".
std::vector<std::string> suite_names();
/// What "all" runs: every suite except the negative controls (planar-bridge
/// only when n = 2).
std::vector<std::string> default_suite_names();

/// Throws UnknownSuiteError for an unknown name and InputError for a
/// dimension the suite does not support.
std::vector<SuiteReport> run_suites(const SuiteRequest& request);

}  // namespace latval
