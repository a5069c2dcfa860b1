#include <benchmark/benchmark.h>

#include "aksw/ariki_koike.hpp"
#include "aksw/braiding.hpp"
#include "aksw/poly.hpp"
#include "aksw/specht.hpp"

using namespace aksw;

namespace {

// (q - l1)^k (q + l2)^k and (q - l1)^k (q^2 - l2)^k share a degree-k factor.
void BM_PolyGcd(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Poly q = Poly::variable(0), l1 = Poly::variable(1), l2 = Poly::variable(2);
  Poly common(1), a(1), b(1);
  for (int i = 0; i < k; ++i) {
    common *= q - l1;
    a *= q + l2;
    b *= q * q - l2;
  }
  Poly x = common * a, y = common * b;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(x, y));
}
BENCHMARK(BM_PolyGcd)->Arg(2)->Arg(4)->Arg(6);

void BM_SpechtModule(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  auto p = generic_hecke_parameters(d);
  auto shapes = multipartitions(d, n);
  for (auto _ : state)
    for (const auto& mu : shapes) benchmark::DoNotOptimize(SpechtModule<RatFun>(mu, p).dim());
}
BENCHMARK(BM_SpechtModule)->Args({2, 3})->Args({3, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_ArikiKoikeRegular(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(basis_rank(ArikiKoike(d, n)));
}
BENCHMARK(BM_ArikiKoikeRegular)->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_SchurWeyl(benchmark::State& state) {
  std::vector<int> levi(static_cast<std::size_t>(state.range(0)), 1);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(schur_weyl_verify(levi, n).passed());
}
BENCHMARK(BM_SchurWeyl)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
