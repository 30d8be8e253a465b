#include <benchmark/benchmark.h>

#include "gsp4h/ext_ledger.hpp"
#include "gsp4h/hodge_kernel.hpp"

using namespace gsp4h;

static void BM_KernelRational(benchmark::State& st) {
  const Rational a(7, 3), b(-5, 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernel_basis(a, b).space.dim());
}
BENCHMARK(BM_KernelRational)->Unit(benchmark::kMillisecond);

static void BM_KernelSymbolic(benchmark::State& st) {
  const RatFunc a = RatFunc::var_a(), b = RatFunc::var_b();
  for (auto _ : st) benchmark::DoNotOptimize(kernel_basis(a, b).space.dim());
}
BENCHMARK(BM_KernelSymbolic)->Unit(benchmark::kMillisecond);

static void BM_Recover(benchmark::State& st) {
  const auto K = kernel_basis(Rational(7, 3), Rational(-5, 2)).space;
  for (auto _ : st) benchmark::DoNotOptimize(recover_parameters(K));
}
BENCHMARK(BM_Recover)->Unit(benchmark::kMicrosecond);

static void BM_GeneratorMatricesSymbolic(benchmark::State& st) {
  const RatFunc a = RatFunc::var_a(), b = RatFunc::var_b();
  for (auto _ : st) benchmark::DoNotOptimize(generator_matrices(a, b).size());
}
BENCHMARK(BM_GeneratorMatricesSymbolic)->Unit(benchmark::kMillisecond);

static void BM_Poly2Gcd(benchmark::State& st) {
  const RatFunc x = RatFunc::parse("(a*b + a + b)^" + std::to_string(st.range(0)) + "*(a - 2*b + 1)");
  const RatFunc y = RatFunc::parse("(a*b + a + b)^" + std::to_string(st.range(0)) + "*(b^2 + a)");
  for (auto _ : st) benchmark::DoNotOptimize(Poly2::gcd(x.num(), y.num()));
}
BENCHMARK(BM_Poly2Gcd)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

static void BM_Ledger(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(check_ledger().ok());
}
BENCHMARK(BM_Ledger)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
