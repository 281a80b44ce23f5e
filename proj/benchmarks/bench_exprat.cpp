#include "nwave/algebra.hpp"
#include "nwave/spectral.hpp"
#include "nwave/toda.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace nwave;

namespace {

ExpPoly random_poly(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  std::vector<ExpPoly::Term> out;
  for (int k = 0; k < terms; ++k)
    out.emplace_back(LinForm{Rational(num(rng)) / den(rng), Rational(num(rng)) / den(rng)},
                     Rational(num(rng) | 1) / den(rng));
  return ExpPoly::from_terms(std::move(out));
}

void BM_PolyProduct(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto a = random_poly(rng, state.range(0)), b = random_poly(rng, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyProduct)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_DivideExact(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto a = random_poly(rng, state.range(0)), b = random_poly(rng, state.range(0));
  auto ab = a * b;
  for (auto _ : state)
    benchmark::DoNotOptimize(divide_exact(ab, b));
}
BENCHMARK(BM_DivideExact)->RangeMultiplier(2)->Range(4, 32);

void BM_RatioArithmetic(benchmark::State& state) {
  std::mt19937_64 rng(3);
  ExpRational a(random_poly(rng, 4), random_poly(rng, 3));
  ExpRational b(random_poly(rng, 4), random_poly(rng, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_RatioArithmetic);

void BM_HankelDeterminant(benchmark::State& state) {
  auto s = sample_spectral(0, 8);
  auto seed = *initial_config(model(Algebra::A2), s)[minus(0, 1)].as_poly();
  for (auto _ : state) {
    HankelChain h(seed, s.constants, 1, 0);
    benchmark::DoNotOptimize(h.det(state.range(0)));
  }
}
BENCHMARK(BM_HankelDeterminant)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_BareissVersusCofactor(benchmark::State& state) {
  auto s = sample_spectral(0, 8);
  HankelChain h(*initial_config(model(Algebra::A2), s)[minus(0, 1)].as_poly(), s.constants, 1, 0);
  auto m = h.matrix(state.range(0));
  for (auto _ : state) {
    if (state.range(1))
      benchmark::DoNotOptimize(det_cofactor(m));
    else
      benchmark::DoNotOptimize(det_bareiss(m));
  }
}
BENCHMARK(BM_BareissVersusCofactor)
    ->ArgsProduct({{3, 4, 5}, {0, 1}})
    ->ArgNames({"n", "cofactor"})
    ->Unit(benchmark::kMillisecond);

}  // namespace
