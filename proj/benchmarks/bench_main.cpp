#include "levellab/construct/constructions.hpp"
#include "levellab/inverse/inverse_module.hpp"
#include "levellab/lab/classify.hpp"
#include "levellab/lab/scan.hpp"
#include "levellab/macaulay/macaulay.hpp"
#include "levellab/poly/span.hpp"
#include "levellab/rng.hpp"

#include <benchmark/benchmark.h>

using namespace levellab;

static void BM_BinomialExpansion(benchmark::State& state) {
  const BigInt n = BigInt(1) << state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(macaulay::macaulay_upper_bound(n, 7));
}
BENCHMARK(BM_BinomialExpansion)->Arg(16)->Arg(64)->Arg(256);

// rank of t random forms of degree 4 in r variables
static void BM_SpanDimension(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  std::vector<poly::Form> forms;
  for (int k = 0; k < 40; ++k) forms.push_back(poly::random_form(r, 4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(poly::span_dimension(forms, 4));
}
BENCHMARK(BM_SpanDimension)->Arg(4)->Arg(6)->Arg(8);

static void BM_DerivativeSpaces(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const auto e = static_cast<std::uint32_t>(state.range(1));
  Rng rng(2);
  const auto m = construct::compressed_generic_module(r, e, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(poly::derivative_dimensions(m.generators()));
}
BENCHMARK(BM_DerivativeSpaces)->Args({3, 6})->Args({4, 5})->Args({6, 4})->Args({10, 3});

static void BM_SumOfPowersProfile(benchmark::State& state) {
  Rng rng(3);
  const auto f = construct::sum_of_powers(4, 5, static_cast<std::size_t>(state.range(0)), rng);
  const inverse::InverseModule m(4, 5, {f});
  for (auto _ : state) benchmark::DoNotOptimize(inverse::h_vector(m));
}
BENCHMARK(BM_SumOfPowersProfile)->Arg(4)->Arg(20)->Arg(56);

static void BM_Classify(benchmark::State& state) {
  const std::vector<HVector> vectors{{1, 3, 6, 10, 4}, {1, 3, 5, 7, 7, 5, 3, 1}, {1, 4, 6, 7}, {1, 5, 12, 22, 10}};
  const auto& h = vectors[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(lab::classify(h, lab::Budget{}, 9));
  state.SetLabel(h.to_string());
}
BENCHMARK(BM_Classify)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_ScanSocleThree(benchmark::State& state) {
  lab::ScanOptions options;
  options.seed = 4;
  options.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lab::scan_ic(HVector{1, 5, 1, 8}, 2, 1, 15, options));
}
BENCHMARK(BM_ScanSocleThree)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
