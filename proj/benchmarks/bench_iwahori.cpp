#include <benchmark/benchmark.h>

#include "iwahori/plancherel.hpp"
#include "iwahori/presentations.hpp"

using namespace iwahori;

static void BM_EnumerateBall(benchmark::State& state) {
  const auto system = CoxeterSystem::affine_c(static_cast<int>(state.range(0)));
  const int radius = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Ball ball = enumerate_ball(system, radius);
    benchmark::DoNotOptimize(ball);
  }
}
BENCHMARK(BM_EnumerateBall)->Args({2, 10})->Args({3, 8})->Args({4, 6})->Unit(benchmark::kMillisecond);

static void BM_HeckeMul(benchmark::State& state) {
  const AlgebraPtr algebra = build(AlgebraName::HpsiMinus, static_cast<int>(state.range(0))).algebra;
  // T_w for a long w times a sum over a ball
  HeckeElt a = word_product(algebra, {1, 2, 1, 2, 3});
  HeckeElt b = one(algebra);
  for (const auto& layer : enumerate_ball(algebra->system(), 3).layers) {
    for (const AffineElt& w : layer) b += basis_elt(algebra, ExtendedElt{false, w});
  }
  for (auto _ : state) {
    HeckeElt product = mul(a, b);
    benchmark::DoNotOptimize(product);
  }
}
BENCHMARK(BM_HeckeMul)->Arg(3)->Arg(4);

static void BM_VerifyIso(benchmark::State& state) {
  const IsoMap map = iso_minus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Report report = verify_iso(map, 6);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyIso)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CompareFd(benchmark::State& state) {
  const AlgebraSpec a = build(AlgebraName::HpsiPlus, 3);
  const AlgebraSpec b = build(AlgebraName::Hplus, 3);
  for (auto _ : state) {
    FdComparison c = compare_fd(a, b, static_cast<int>(state.range(0)), 2);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CompareFd)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
