#include <weylbound/bounds.hpp>

#include <benchmark/benchmark.h>

using namespace weylbound;

namespace {

void BM_build_e8(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(RootSystem::build({Family::E, 8}));
  }
}
BENCHMARK(BM_build_e8);

void BM_restricted_max_depth_e8(benchmark::State& state) {
  const RootSystem e8 = RootSystem::build({Family::E, 8});
  const PrimeContext ctx(31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(restricted_max_depth(e8, ctx));
  }
}
BENCHMARK(BM_restricted_max_depth_e8);

void BM_jantzen_sum_g2(benchmark::State& state) {
  const RootSystem g2 = RootSystem::build({Family::G, 2});
  const PrimeContext ctx(7);
  const Weight top{{6, 6}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(jantzen_sum(g2, top, ctx));
  }
}
BENCHMARK(BM_jantzen_sum_g2);

void BM_linkage_rep_f4(benchmark::State& state) {
  const RootSystem f4 = RootSystem::build({Family::F, 4});
  const PrimeContext ctx(5);
  const Weight far{{40, -17, 23, -9}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(linkage_rep(f4, far, ctx));
  }
}
BENCHMARK(BM_linkage_rep_f4);

void BM_length_bound_exact_a3(benchmark::State& state) {
  const RootSystem a3 = RootSystem::build({Family::A, 3});
  const PrimeContext ctx(5);
  const Weight top{{4, 4, 4}};
  for (auto _ : state) {
    LengthCache cache;
    benchmark::DoNotOptimize(length_bound_exact(a3, top, ctx, cache));
  }
}
BENCHMARK(BM_length_bound_exact_a3);

void BM_weyl_dim_e8_steinberg(benchmark::State& state) {
  const RootSystem e8 = RootSystem::build({Family::E, 8});
  const Weight steinberg{std::vector<long long>(8, 8)}; // (p^2 - 1)rho at p = 3
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl_dim(e8, steinberg));
  }
}
BENCHMARK(BM_weyl_dim_e8_steinberg);

void BM_h1_bound_defining(benchmark::State& state) {
  const long long h = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h1_bound_defining(h, 2));
  }
}
BENCHMARK(BM_h1_bound_defining)->Arg(12)->Arg(30)->Arg(51);

void BM_growth_table(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth_table(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_growth_table)->Arg(8)->Arg(20);

} // namespace

BENCHMARK_MAIN();
