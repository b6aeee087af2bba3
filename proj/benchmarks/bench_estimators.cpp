// Throughput of the samplers, estimators and a short optimisation run.

#include <benchmark/benchmark.h>

#include "zoopt/estimators.hpp"
#include "zoopt/optimizer.hpp"
#include "zoopt/problems.hpp"
#include "zoopt/sampling.hpp"

using namespace zoopt;

namespace {

void BM_SphereL1(benchmark::State& state) {
  RngStream rng(1, 0);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_sphere_l1(d, rng));
}

void BM_SphereL2(benchmark::State& state) {
  RngStream rng(1, 0);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_sphere_l2(d, rng));
}

void BM_GradEst(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Scheme scheme = state.range(1) == 1 ? Scheme::L1 : Scheme::L2;
  const Problem pb = make_problem(ProblemKind::NonsmoothNorm, d);
  NoisyOracle oracle(pb.objective, {NoiseKind::Gaussian, 0.01});
  EstimatorConfig cfg;
  cfg.scheme = scheme;
  cfg.gamma = 0.05;
  EstimatorRng rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(grad_est(oracle, pb.start, cfg, rng));
  state.SetItemsProcessed(state.iterations() * 2);  // oracle calls
}

void BM_Run(benchmark::State& state) {
  const Problem pb = make_problem(ProblemKind::NonsmoothNorm, 4);
  const EstimatorConfig est = estimator_for_target(pb, Scheme::L2, Setting::Nonsmooth, 0.05);
  RunConfig rc;
  rc.iterations = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(pb, rc, est, {NoiseKind::Gaussian, 0.01}));
}

}  // namespace

BENCHMARK(BM_SphereL1)->RangeMultiplier(4)->Range(4, 1024);
BENCHMARK(BM_SphereL2)->RangeMultiplier(4)->Range(4, 1024);
BENCHMARK(BM_GradEst)->ArgsProduct({{4, 64, 1024}, {1, 2}});
BENCHMARK(BM_Run)->Arg(1000)->Arg(10000);
BENCHMARK_MAIN();
