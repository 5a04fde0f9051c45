#include <benchmark/benchmark.h>

#include <random>

#include "cherednik/hilbert.hpp"
#include "cherednik/stability.hpp"

using namespace cherednik;

namespace {

std::shared_ptr<const PrimeField> fp(std::uint32_t p) { return std::make_shared<const PrimeField>(p, 1); }
std::shared_ptr<const RationalFunctionField> fc(std::uint32_t p) {
  return std::make_shared<const RationalFunctionField>(p);
}

void BM_DunklDifference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  DunklContext<PrimeField> ctx(n, 1, fp(3));
  std::mt19937_64 rng(42);
  const auto f = random_homogeneous(ctx.field_ptr(), ctx.slots(), 6, 20, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.dunkl_difference(f, 1, 2));
}
BENCHMARK(BM_DunklDifference)->Arg(4)->Arg(6)->Arg(8);

void BM_MonomialImage(benchmark::State& state) {
  MonomialDunkl images(7, 2);
  Monomial m(6);
  m.set(0, 3);
  m.set(1, 2);
  m.set(4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(images.image(m, 1, 7));
}
BENCHMARK(BM_MonomialImage);

void BM_KernelT0(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    DunklContext<PrimeField> ctx(n, 0, fp(p));
    GradedKernel<PrimeField> k(ctx);
    k.run();
    benchmark::DoNotOptimize(k.series());
  }
}
BENCHMARK(BM_KernelT0)->Args({2, 7})->Args({3, 7})->Args({5, 6})->Unit(benchmark::kMillisecond);

void BM_KernelT1Generic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    DunklContext<RationalFunctionField> ctx(n, 1, fc(2));
    GradedKernel<RationalFunctionField> k(ctx);
    k.run();
    benchmark::DoNotOptimize(k.series());
  }
}
BENCHMARK(BM_KernelT1Generic)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_KernelT1FastEval(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    DunklContext<ExtensionField> ctx(n, 1, std::make_shared<const ExtensionField>(2, 1));
    GradedKernel<ExtensionField> k(ctx);
    k.run();
    benchmark::DoNotOptimize(k.series());
  }
}
BENCHMARK(BM_KernelT1FastEval)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_GramOracle(benchmark::State& state) {
  DunklContext<PrimeField> ctx(5, 1, fp(2));
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_oracle_rowspace(ctx, d).rank());
}
BENCHMARK(BM_GramOracle)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DescentMembership(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  DunklContext<RationalFunctionField> ctx(n, 1, fc(2));
  const auto f = parse_poly("x1^4*x2^4", n - 1, ctx.field_ptr());
  for (auto _ : state) benchmark::DoNotOptimize(kernel_membership_descent(f, ctx).in_kernel);
}
BENCHMARK(BM_DescentMembership)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_StabilitySweep(benchmark::State& state) {
  auto F = fc(2);
  const auto f = parse_poly("x1^2*x2^2*x3^2*x4^2", 4, F);
  for (auto _ : state) benchmark::DoNotOptimize(is_stably_in_kernel(f, F).stable);
}
BENCHMARK(BM_StabilitySweep)->Unit(benchmark::kMillisecond);

void BM_ConjectureEvaluation(benchmark::State& state) {
  const auto cong = CongruenceData::of(40, 7);
  for (auto _ : state) benchmark::DoNotOptimize(conjectured_hilbert(cong, 1).poly.coeffs());
}
BENCHMARK(BM_ConjectureEvaluation);

}  // namespace

BENCHMARK_MAIN();
