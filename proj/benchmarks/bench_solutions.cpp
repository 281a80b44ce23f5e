#include "nwave/tau.hpp"
#include "nwave/transforms.hpp"
#include "nwave/verify.hpp"

#include <benchmark/benchmark.h>

using namespace nwave;

namespace {

void BM_TauGroups(benchmark::State& state) {
  auto s = sample_spectral(3, 6);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(tau_groups(s, n, {n, n}));
}
BENCHMARK(BM_TauGroups)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SolutionFromTau(benchmark::State& state) {
  auto a = static_cast<Algebra>(state.range(0));
  auto s = sample_spectral(2, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(solution_from_tau(model(a), s, 1, 1));
}
BENCHMARK(BM_SolutionFromTau)
    ->Arg(static_cast<int>(Algebra::A2))
    ->Arg(static_cast<int>(Algebra::B2))
    ->Unit(benchmark::kMillisecond);

void BM_TransformB2(benchmark::State& state) {
  auto cfg = initial_config(model(Algebra::B2), sample_spectral(2, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(apply(TransformId::B2_T10, cfg));
}
BENCHMARK(BM_TransformB2)->Unit(benchmark::kMillisecond);

void BM_VerifyConfig(benchmark::State& state) {
  auto mode = state.range(0) ? Mode::Numeric : Mode::Exact;
  auto cfg = solution_from_tau(model(Algebra::A2), sample_spectral(2, 2), 1, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_config(model(Algebra::A2), cfg, mode));
}
BENCHMARK(BM_VerifyConfig)->Arg(0)->Arg(1)->ArgName("numeric")->Unit(benchmark::kMillisecond);

void BM_VerifySuite(benchmark::State& state) {
  auto mode = state.range(0) ? Mode::Numeric : Mode::Exact;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_suite("a2-full", mode));
}
BENCHMARK(BM_VerifySuite)->Arg(0)->Arg(1)->ArgName("numeric")->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
