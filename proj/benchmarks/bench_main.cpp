#include <benchmark/benchmark.h>

#include "qgsmooth/corpus.hpp"
#include "qgsmooth/wahl.hpp"

namespace {

const qgs::Chain kLong({5, 8, 6, 2, 3, 2, 2, 2, 2, 2, 3, 2, 2, 2});

void BM_HjValue(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qgs::hj_value(kLong));
}
BENCHMARK(BM_HjValue);

void BM_HjFraction64(benchmark::State& state) {
  const auto& e = kLong.entries();
  for (auto _ : state) benchmark::DoNotOptimize(qgs::hj_fraction64(e));
}
BENCHMARK(BM_HjFraction64);

void BM_RecognizeClassT(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qgs::recognize_class_T(kLong));
}
BENCHMARK(BM_RecognizeClassT);

void BM_RecognizeClassT64(benchmark::State& state) {
  const auto f = *qgs::hj_fraction64(kLong.entries());
  for (auto _ : state) benchmark::DoNotOptimize(qgs::recognize_class_T64(f.m, f.q));
}
BENCHMARK(BM_RecognizeClassT64);

void BM_Discrepancies(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qgs::discrepancies(kLong));
}
BENCHMARK(BM_Discrepancies);

void BM_GenerateClassT(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qgs::generate_class_T(len, 12));
}
BENCHMARK(BM_GenerateClassT)->Arg(4)->Arg(6)->Arg(8);

void BM_VerifyExample(benchmark::State& state) {
  const auto& name = qgs::example_names()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(qgs::verify_example(name));
}
BENCHMARK(BM_VerifyExample)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
