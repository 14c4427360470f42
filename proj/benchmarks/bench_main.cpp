#include <benchmark/benchmark.h>

#include <random>

#include "quaplectic/field_eq.hpp"
#include "quaplectic/gelfand.hpp"
#include "quaplectic/groups.hpp"
#include "quaplectic/kinematics.hpp"
#include "quaplectic/lie_core.hpp"

using namespace quaplectic;

static void BM_BracketComplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gens = basis_generators(n, Basis::complex);
  for (auto _ : state)
    for (const auto& x : gens)
      for (const auto& y : gens)
        benchmark::DoNotOptimize(bracket_complex(AlgebraElement::generator(n, x), AlgebraElement::generator(n, y)));
}
BENCHMARK(BM_BracketComplex)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_QuaplecticCompose(benchmark::State& state) {
  std::mt19937_64 rng(0);
  const auto x = random_quaplectic(2, rng), y = random_quaplectic(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(q_compose(x, y));
}
BENCHMARK(BM_QuaplecticCompose);

static void BM_PureBoost(benchmark::State& state) {
  const PhysicalConstants k;
  const Vec3 beta(0.3, -0.2, 0.5), gamma(0.1, 0.4, -0.6);
  for (auto _ : state) benchmark::DoNotOptimize(pure_boost(beta, gamma, k));
}
BENCHMARK(BM_PureBoost);

static void BM_BuildFockBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_basis(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildFockBasis)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_HermiteOracle(benchmark::State& state) {
  const FockBasis b = build_basis(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_oracle_op(1, Sign::plus, b));
}
BENCHMARK(BM_HermiteOracle)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

static void BM_SigmaOperators(benchmark::State& state) {
  const GTBasis b = enumerate_patterns({3, 1, -2}, true);
  for (auto _ : state) benchmark::DoNotOptimize(SigmaOperators(b));
}
BENCHMARK(BM_SigmaOperators)->Unit(benchmark::kMicrosecond);

static void BM_CasimirAssembly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IrrepLabel label(static_cast<std::size_t>(n + 1), 0);
  label[0] = 1;
  const SigmaOperators ops(enumerate_nonunitary(label));
  const FieldRepresentation rep(ops, build_basis(n, 8), {1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(rho_casimir_op(2, rep));
}
BENCHMARK(BM_CasimirAssembly)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_CompactFieldSpectrum(benchmark::State& state) {
  const GTBasis b = enumerate_patterns({1, 0, 0}, true);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto p = compact_field_operator(b, k, 1);
    benchmark::DoNotOptimize(solve_spectrum(p.matrix));
  }
}
BENCHMARK(BM_CompactFieldSpectrum)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_WeylGroupElement(benchmark::State& state) {
  const FockBasis b = build_basis(0, 40);
  const HeisenbergElement h{Eigen::Vector2d(0.3, -0.2), 0.1, MetricForm::canonical};
  for (auto _ : state) benchmark::DoNotOptimize(rep_group_element(h, {1.0, 1.0}, b));
}
BENCHMARK(BM_WeylGroupElement)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
