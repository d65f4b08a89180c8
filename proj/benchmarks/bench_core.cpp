#include <benchmark/benchmark.h>

#include "cremona/families.hpp"

namespace {

using namespace cremona;

void BM_PolyMul(benchmark::State& state) {
  Domain<Fp> dom(32003);
  SeedStream rng(7, 'b');
  Polynomial<Fp> a = detail::random_form(Ring::p3(), dom, rng, 4);
  Polynomial<Fp> b = detail::random_form(Ring::p3(), dom, rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul);

void BM_GroebnerMonoidalBase(benchmark::State& state) {
  Domain<Fp> dom(32003);
  for (auto _ : state) {
    state.PauseTiming();
    SeedStream rng(state.iterations(), 'b');
    FamilyMember<Fp> member = make_jonquieres(dom, 4, rng);
    std::vector<Polynomial<Fp>> gens(member.map.components().begin(),
                                     member.map.components().end());
    Ideal<Fp> ideal(Ring::p3(), gens);
    state.ResumeTiming();
    benchmark::DoNotOptimize(ideal.groebner());
  }
}
BENCHMARK(BM_GroebnerMonoidalBase);

void BM_BaseIdealSaturation(benchmark::State& state) {
  Domain<Fp> dom(32003);
  for (auto _ : state) {
    state.PauseTiming();
    SeedStream rng(state.iterations(), 'c');
    FamilyMember<Fp> member = make_determinantal(dom, rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(member.map.base_ideal());
  }
}
BENCHMARK(BM_BaseIdealSaturation);

void BM_Hilbert(benchmark::State& state) {
  Domain<Fp> dom(32003);
  SeedStream rng(11, 'd');
  FamilyMember<Fp> member = make_determinantal(dom, rng);
  for (auto _ : state) {
    Ideal<Fp> fresh(member.map.ring(), member.map.base_ideal().gens());
    benchmark::DoNotOptimize(fresh.hilbert());
  }
}
BENCHMARK(BM_Hilbert);

}  // namespace

BENCHMARK_MAIN();
