#include <benchmark/benchmark.h>

#include "mcodes/census.hpp"
#include "mcodes/mcode.hpp"
#include "mcodes/polyfact.hpp"
#include "mcodes/rankmetric.hpp"

using namespace mcodes;

namespace {

KPoly random_monic(const FieldPtr<BaseField>& k, int deg, Rng& rng) {
  std::vector<KElt> v;
  for (int i = 0; i < deg; ++i) v.push_back(k->random(rng));
  v.push_back(k->one());
  return KPoly(k, v);
}

}  // namespace

static void BM_ExtMul(benchmark::State& state) {
  auto t = make_tower(3, 1, static_cast<unsigned>(state.range(0)));
  Rng rng(1);
  auto a = t.ext->random(rng), b = t.ext->random(rng);
  for (auto _ : state) {
    a = t.ext->mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ExtMul)->Arg(4)->Arg(10)->Arg(18);

static void BM_ExtInverse(benchmark::State& state) {
  auto t = make_tower(5, 1, static_cast<unsigned>(state.range(0)));
  Rng rng(2);
  auto a = t.ext->random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(t.ext->inv(a));
}
BENCHMARK(BM_ExtInverse)->Arg(4)->Arg(18);

static void BM_Factor(benchmark::State& state) {
  auto t = make_tower(7, 1, 1);
  Rng rng(3);
  auto f = random_monic(t.base, static_cast<int>(state.range(0)), rng);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor(f, seed++));
}
BENCHMARK(BM_Factor)->RangeMultiplier(2)->Range(8, 64);

static void BM_Rref(benchmark::State& state) {
  auto t = make_tower(2, 1, 8);
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  LMat a(t.ext, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = t.ext->random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_CyclicDecomposition(benchmark::State& state) {
  auto t = make_tower(5, 1, 1);
  auto f1 = KPoly::from_ints(t.base, {-2, 0, 1});
  auto f2 = KPoly::from_ints(t.base, {1, 1, 1});
  auto m = block_diag<BaseField>({companion(f1), companion(f1 * pow(f2, 2)), companion(pow(f1, 2) * pow(f2, 3))});
  const auto mode = state.range(0) ? DecompositionMode::PrimaryCyclic : DecompositionMode::InvariantFactors;
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_decomposition(m, mode));
}
BENCHMARK(BM_CyclicDecomposition)->Arg(0)->Arg(1);

static void BM_OracleHierarchy(benchmark::State& state) {
  auto t = make_tower(7, 1, 4);
  auto f = KPoly::from_ints(t.base, {-1, 0, 0, 0, 1});
  auto m = companion(f);
  const auto k = static_cast<std::size_t>(state.range(0));
  LinearCode c = LinearCode::zero(t, 4);
  for (const auto& g : monic_divisors(factor(t.lift(f)))) {
    if (4 - static_cast<std::size_t>(g.degree()) != k) continue;
    c = from_generator(t, m, g).second;
    break;
  }
  for (auto _ : state) benchmark::DoNotOptimize(grw_hierarchy(c));
}
BENCHMARK(BM_OracleHierarchy)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ClosedForms(benchmark::State& state) {
  auto t = make_tower(3, 1, 10, std::nullopt, 42);
  auto f1 = KPoly::from_ints(t.base, {1, 0, 1});
  auto f = pow(f1, 2) * pow(KPoly::from_ints(t.base, {1, 1}), 3) * pow(KPoly::from_ints(t.base, {-1, 1}), 2);
  auto m = companion(f);
  auto i = *find_root(f1, t);
  LPoly g(t.ext, std::vector<LElt>{t.ext->neg(i), t.ext->one()});
  for (auto _ : state) {
    auto code = from_generator(t, m, g).first;
    benchmark::DoNotOptimize(last_weight_closed(code));
    benchmark::DoNotOptimize(generator_bounds(code));
  }
}
BENCHMARK(BM_ClosedForms)->Unit(benchmark::kMillisecond);

static void BM_CyclicCensus(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_census(n, 2, 6));
}
BENCHMARK(BM_CyclicCensus)->Arg(15)->Arg(63)->Arg(255);

static void BM_ExhaustiveCensus(benchmark::State& state) {
  auto t = make_tower(7, 1, 4);
  auto f = KPoly::from_ints(t.base, {-1, 0, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_census(f, t));
}
BENCHMARK(BM_ExhaustiveCensus)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
