#include <benchmark/benchmark.h>

#include "stabkit/apolarity.hpp"
#include "stabkit/generators.hpp"
#include "stabkit/polarization.hpp"
#include "stabkit/stability.hpp"

using namespace stabkit;

namespace {

BihomPoly sample_poly(const DegreeVec& lam, std::uint64_t seed) {
  Rng rng(seed);
  return gen_random_poly(lam, rng);
}

void BM_apolarity_form(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  BihomPoly p = sample_poly(DegreeVec{n}, 1);
  BihomPoly q = sample_poly(DegreeVec{n}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(apolarity_form(p, q));
}
BENCHMARK(BM_apolarity_form)->Arg(4)->Arg(8)->Arg(12);

void BM_transvectant(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  BihomPoly p = sample_poly(DegreeVec{n}, 3);
  BihomPoly q = sample_poly(DegreeVec{n}, 4);
  unsigned r = n / 2;
  for (auto _ : state) benchmark::DoNotOptimize(transvectant(p, q, r));
}
BENCHMARK(BM_transvectant)->Arg(4)->Arg(8);

void BM_symbol_roundtrip(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  Rng rng(5);
  LinearOp T = gen_random_operator(DegreeVec{n}, DegreeVec{n}, rng);
  for (auto _ : state) {
    BihomPoly s = symbol(T);
    benchmark::DoNotOptimize(operator_from_symbol(s, T.in_degree(), T.out_degree()));
  }
}
BENCHMARK(BM_symbol_roundtrip)->Arg(2)->Arg(4);

void BM_real_rooted(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  Rng rng(7);
  BihomPoly p = gen_real_rooted_monic(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(real_rooted(p));
}
BENCHMARK(BM_real_rooted)->Arg(4)->Arg(8);

void BM_univariate_stable(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  Rng rng(9);
  Region upper = Region::upper_half_plane();
  BihomPoly p = gen_rooted(n, Region::lower_half_plane(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(univariate_stable(p, upper, 64));
}
BENCHMARK(BM_univariate_stable)->Arg(4)->Arg(6);

void BM_polarize(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  BihomPoly p = sample_poly(DegreeVec{n}, 11);
  for (auto _ : state) benchmark::DoNotOptimize(polarize(p));
}
BENCHMARK(BM_polarize)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
