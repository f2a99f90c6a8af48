#include <random>

#include <benchmark/benchmark.h>

#include "superell/curves.hpp"
#include "superell/lfunction.hpp"

using namespace superell;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const Field F = Field::make(5, static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Elem> d(1, F.size() - 1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = d(rng);
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem x : xs) acc = F.mul(acc, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(2)->Arg(6)->Arg(12);

void BM_Resultant(benchmark::State& state) {
  const Field F = Field::make(5, 2);
  const int da = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Elem> d(0, F.size() - 1);
  std::vector<Elem> a(da + 1), b(da);
  for (auto& x : a) x = d(rng);
  for (auto& x : b) x = d(rng);
  a.back() = 1;
  b.back() = 1;
  for (auto _ : state) benchmark::DoNotOptimize(detail::resultant_raw(F.data(), a.data(), da, b.data(), da - 1));
}
BENCHMARK(BM_Resultant)->Arg(3)->Arg(6)->Arg(12);

void BM_LPolynomial(benchmark::State& state) {
  const Field F = Field::make(7);
  const auto chars = enumerate_order_ell(F, 3, static_cast<unsigned>(state.range(0)));
  const DirichletChar& chi = chars.back();
  for (auto _ : state) benchmark::DoNotOptimize(l_polynomial(chi));
}
BENCHMARK(BM_LPolynomial)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_CountPoints(benchmark::State& state) {
  const Field F = Field::make(7);
  const SuperellipticModel m(3, F, 1, {Poly(F, {0, 6, 0, 1}) * Poly(F, {1, 0, 1}), Poly(F, {2, 1})});
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(m, n));
}
BENCHMARK(BM_CountPoints)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
