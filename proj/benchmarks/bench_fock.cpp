#include <benchmark/benchmark.h>

#include "qfock/qfock.hpp"

namespace {

using namespace qfock;

void BM_InnerProductPowers(benchmark::State& state) {
  const ExactQ q(Rational(1, 2));
  const FockVector<Rational> v(Word::repeated(kGenerator, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(v, v, q));
}
BENCHMARK(BM_InnerProductPowers)->DenseRange(4, 16, 4);

void BM_InnerProductBruteforce(benchmark::State& state) {
  const ExactQ q(Rational(1, 2));
  const FockVector<Rational> v(Word::repeated(kGenerator, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(inner_product_bruteforce(v, v, q));
}
BENCHMARK(BM_InnerProductBruteforce)->DenseRange(4, 8, 2);

void BM_InnerProductFloat(benchmark::State& state) {
  const FloatQ q(0.5);
  Sampler sampler(1);
  const Basis basis(3);
  const auto a = sampler.vector<double>(basis, static_cast<std::size_t>(state.range(0)), 8);
  const auto b = sampler.vector<double>(basis, static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(a, b, q));
}
BENCHMARK(BM_InnerProductFloat)->Arg(6)->Arg(10);

void BM_GramLdlt(benchmark::State& state) {
  const ExactQ q(Rational(3, 10));
  const auto words = enumerate_words(Basis(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ldlt(gram_matrix<Rational>(words, q)));
}
BENCHMARK(BM_GramLdlt)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
