// Parallel evaluation/interpolation kernels against the serial symbolic references.

#include "nk/linalg.hpp"
#include "nk/novikov.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace nk;

namespace {

const PolyMatrix& conway_minor() {
  static const PolyMatrix m = [] {
    const Presentation p = load_presentation(std::string(NK_FIXTURE_DIR) + "/conway.pres");
    const MatrixRep rho = perm_to_matrix(*load_representation(std::string(NK_FIXTURE_DIR) + "/conway_h.rep", p).perm);
    const TwistedComplex c = build_complex(p, rho);
    return torsion_minor(c, c.g - 1, {c.r - 1});
  }();
  return m;
}

const TwistedComplex& conway_complex() {
  static const TwistedComplex c = [] {
    const Presentation p = load_presentation(std::string(NK_FIXTURE_DIR) + "/conway.pres");
    const MatrixRep rho = perm_to_matrix(*load_representation(std::string(NK_FIXTURE_DIR) + "/conway_h.rep", p).perm);
    return build_complex(p, rho);
  }();
  return c;
}

PolyMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> low(-2, 2), span(0, 3), coef(-5, 5);
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Integer> c(static_cast<std::size_t>(span(rng)) + 1);
      for (auto& x : c) x = coef(rng);
      m(i, j) = LaurentPoly(low(rng), c);
    }
  return m;
}

void BM_DetParallel_Conway(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(det(conway_minor()));
}
void BM_DetSymbolic_Conway(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(det_symbolic(conway_minor()));
}

void BM_DetParallel_Random(benchmark::State& s) {
  const PolyMatrix m = random_matrix(static_cast<std::size_t>(s.range(0)), 7);
  for (auto _ : s) benchmark::DoNotOptimize(det(m));
}
void BM_DetSymbolic_Random(benchmark::State& s) {
  const PolyMatrix m = random_matrix(static_cast<std::size_t>(s.range(0)), 7);
  for (auto _ : s) benchmark::DoNotOptimize(det_symbolic(m));
}

void BM_RankParallel_ConwayD2(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(rank_over_function_field(conway_complex().d2));
}
void BM_RankSymbolic_ConwayD2(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(rank_symbolic(conway_complex().d2));
}

}  // namespace

BENCHMARK(BM_DetParallel_Conway)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetSymbolic_Conway)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_DetParallel_Random)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetSymbolic_Random)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel_ConwayD2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSymbolic_ConwayD2)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
