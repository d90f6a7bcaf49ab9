#include <benchmark/benchmark.h>

#include "qfock/qfock.hpp"

namespace {

using namespace qfock;

void BM_WickExpandFull(benchmark::State& state) {
  const ExactQ q(Rational(1, 2));
  const Word w = Word::repeated(kGenerator, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wick_expand(w, q));
}
BENCHMARK(BM_WickExpandFull)->DenseRange(4, 12, 4);

void BM_WickExpandGrouped(benchmark::State& state) {
  const ExactQ q(Rational(1, 2));
  const Word w = Word::repeated(kGenerator, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wick_expand_grouped(w, q));
}
BENCHMARK(BM_WickExpandGrouped)->DenseRange(4, 24, 4);

void BM_ApplyW(benchmark::State& state) {
  const ExactQ q(Rational(1, 2));
  const Word w = Word::repeated(kGenerator, static_cast<std::size_t>(state.range(0)));
  const FockVector<Rational> v(Word{1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(apply_w(w, v, q));
}
BENCHMARK(BM_ApplyW)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_ApplyWRecursive(benchmark::State& state) {
  const ExactQ q(Rational(1, 2));
  const Word w = Word::repeated(kGenerator, static_cast<std::size_t>(state.range(0)));
  const FockVector<Rational> v(Word{1, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(apply_w_recursive(w, v, q));
}
BENCHMARK(BM_ApplyWRecursive)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
