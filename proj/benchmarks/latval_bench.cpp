#include "latval/decompositions.hpp"
#include "latval/ehrhart.hpp"
#include "latval/operators.hpp"
#include "latval/random.hpp"
#include "latval/suites.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace latval;

std::vector<RationalVector> random_cloud(std::size_t n, std::size_t count, std::uint64_t seed) {
  Engine rng = make_engine(seed);
  std::vector<RationalVector> pts(count, RationalVector(n));
  for (auto& x : pts)
    for (auto& c : x) c = Rational(uniform_int(rng, -20, 20));
  return pts;
}

void BM_Hull(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = random_cloud(n, static_cast<std::size_t>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(Polytope::hull(pts));
}
BENCHMARK(BM_Hull)->Args({2, 200})->Args({3, 100})->Args({4, 50})->Unit(benchmark::kMillisecond);

void BM_FacetSystem(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polytope p = Polytope::hull(random_cloud(n, 40, 11));
  for (auto _ : state) benchmark::DoNotOptimize(facet_system(p));
}
BENCHMARK(BM_FacetSystem)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MinkowskiSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polytope p = random_lattice_polytope(n, kDefaultBox, n + 4, 1);
  const Polytope q = random_lattice_polytope(n, kDefaultBox, n + 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(p, q));
}
BENCHMARK(BM_MinkowskiSum)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CountDilate(benchmark::State& state) {
  const LatticePointEnumerator e(Polytope::standard_simplex(3));
  for (auto _ : state) benchmark::DoNotOptimize(e.count(state.range(0)));
}
BENCHMARK(BM_CountDilate)->RangeMultiplier(4)->Range(4, 64)->Unit(benchmark::kMillisecond);

void BM_DiscreteSteiner(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polytope p = random_lattice_polytope(n, kDefaultBox, n + 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(discrete_steiner(p));
}
BENCHMARK(BM_DiscreteSteiner)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ProjectionBody(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polytope p = random_lattice_polytope(n, kDefaultBox, n + 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(projection_body(p));
}
BENCHMARK(BM_ProjectionBody)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CubeTriangulation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cube_triangulation(n));
}
BENCHMARK(BM_CubeTriangulation)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
