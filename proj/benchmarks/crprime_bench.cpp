#include <benchmark/benchmark.h>

#include "crprime/heisenberg/conformal.hpp"
#include "crprime/heisenberg/green.hpp"
#include "crprime/moser/moser.hpp"
#include "crprime/sphere/sphere.hpp"

using namespace crprime;
using namespace crprime::vars;

static void BM_PolyProduct(benchmark::State& state) {
  Poly p = pow(Poly(1) + z() + zb() + u(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(p * p.conj());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyProduct)->DenseRange(2, 8, 2)->Complexity();

static void BM_MoserStructure(benchmark::State& state) {
  MoserData md = MoserData::generic();
  for (auto _ : state) benchmark::DoNotOptimize(moser_structure(md, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MoserStructure)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_ChainRestriction(benchmark::State& state) {
  auto ms = moser_structure(MoserData::random(1, 2), 8);
  for (auto _ : state) benchmark::DoNotOptimize(chain_restriction(ms));
}
BENCHMARK(BM_ChainRestriction)->Unit(benchmark::kMillisecond);

static void BM_HeisenbergSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(heisenberg_suite(1));
}
BENCHMARK(BM_HeisenbergSuite)->Unit(benchmark::kMillisecond);

static void BM_ConformalExact(benchmark::State& state) {
  Poly f = conformal_battery().at(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conformal_exact_checks(f, "bench"));
}
BENCHMARK(BM_ConformalExact)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_TotalQPrime(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.radial = static_cast<int>(state.range(0));
  cfg.polar = 2 * cfg.radial / 3;
  for (auto _ : state) benchmark::DoNotOptimize(total_q_prime(cfg));
}
BENCHMARK(BM_TotalQPrime)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

static void BM_DeltaNormalization(benchmark::State& state) {
  auto b = bump_profiles().front();
  QuadratureConfig cfg{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 4, 1.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(delta_normalization(b, cfg, 1.2 * b.support_rho));
}
BENCHMARK(BM_DeltaNormalization)->RangeMultiplier(2)->Range(48, 192)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
