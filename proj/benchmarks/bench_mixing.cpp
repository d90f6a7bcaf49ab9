#include <benchmark/benchmark.h>

#include "qfock/qfock.hpp"

namespace {

using namespace qfock;

void BM_MixingCoefficient(benchmark::State& state) {
  const ExactQ q(Rational(1, 2));
  const Basis basis(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mixing_coefficient(Word{1, 0}, Word{0, 1}, n, q, basis));
}
BENCHMARK(BM_MixingCoefficient)->DenseRange(4, 24, 4)->Unit(benchmark::kMicrosecond);

void BM_MixingSeries(benchmark::State& state) {
  const ExactQ q(Rational(-1, 2));
  const Basis basis(2);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixing_series(Word{1, 0, 1}, Word{1, 1}, 24, q, basis, {}, threads));
  }
}
BENCHMARK(BM_MixingSeries)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
