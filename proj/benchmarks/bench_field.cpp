#include <benchmark/benchmark.h>

#include "qfcodes/extension.hpp"
#include "qfcodes/field.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto F = qfc::FieldContext::make(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const qfc::Elem q = F.order();
  qfc::Elem x = 1;
  for (auto _ : state) {
    for (qfc::Elem y = 1; y < q; ++y) x = F.mul(F.add(x, y), y);
    benchmark::DoNotOptimize(x);
  }
  state.SetItemsProcessed(state.iterations() * (q - 1));
}
BENCHMARK(BM_FieldMul)->Args({3, 1})->Args({3, 2})->Args({13, 1})->Args({3, 5});

void BM_ExtTrace(benchmark::State& state) {
  const auto ext = qfc::ExtContext::make(qfc::make_field(3, 1), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    qfc::Elem acc = 0;
    for (qfc::ExtElem x = 0; x < ext.size(); ++x) acc += ext.trace(x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ext.size()));
}
BENCHMARK(BM_ExtTrace)->Arg(4)->Arg(6)->Arg(8);

}  // namespace
