#include <benchmark/benchmark.h>

#include "qfcodes/code.hpp"
#include "qfcodes/predict.hpp"
#include "qfcodes/quadform.hpp"

namespace {

qfc::QuadForm hyperbolic_form(unsigned p, unsigned m, unsigned r) {
  return qfc::standard_form(qfc::make_field(p, 1), qfc::FormClass::hyperbolic(r), m);
}

void BM_DefiningSet(benchmark::State& state) {
  const auto q = hyperbolic_form(3, static_cast<unsigned>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(qfc::defining_set(q, 1).size());
}
BENCHMARK(BM_DefiningSet)->Arg(5)->Arg(7)->Arg(9);

void BM_BruteCwe(benchmark::State& state) {
  const auto q = hyperbolic_form(3, static_cast<unsigned>(state.range(0)), 4);
  const auto d = qfc::defining_set(q, 1);
  qfc::EnumerationOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qfc::brute_cwe(d, opts).terms.size());
}
BENCHMARK(BM_BruteCwe)->Args({4, 1})->Args({5, 1})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_PredictedCwe(benchmark::State& state) {
  const auto F = qfc::make_field(static_cast<unsigned>(state.range(0)), 1);
  const auto c = qfc::FormClass::hyperbolic(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfc::predicted_cwe(*F, c, 12, 1, qfc::Convention::Reflected).cwe.terms.size());
  }
}
BENCHMARK(BM_PredictedCwe)->Arg(3)->Arg(13)->Arg(31);

}  // namespace
BENCHMARK_MAIN();
