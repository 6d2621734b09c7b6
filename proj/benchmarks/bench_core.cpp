#include <benchmark/benchmark.h>

#include "skeinrep/algebra.hpp"
#include "skeinrep/hom.hpp"
#include "skeinrep/modules.hpp"

using namespace skeinrep;

static void BM_CycMultiply(benchmark::State& state) {
  auto F = CycField::make(state.range(0));
  Rng rng(1);
  Cyc a = rng.nonzero(*F), b = rng.nonzero(*F);
  for (auto _ : state) {
    Cyc c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CycMultiply)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

static void BM_CycInverse(benchmark::State& state) {
  auto F = CycField::make(state.range(0));
  Rng rng(2);
  Cyc a = rng.nonzero(*F);
  for (auto _ : state) {
    Cyc c = a.inverse();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CycInverse)->Arg(3)->Arg(7);

static void BM_KernelBasis(benchmark::State& state) {
  auto F = CycField::make(5);
  Rng rng(3);
  long n = state.range(0);
  Mat M(F.get(), n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) M.at(i, j) = rng.scalar(*F);
  for (long j = 0; j < n; ++j) M.at(0, j) = M.at(1, j);  // force a kernel
  for (auto _ : state) {
    auto K = kernel_basis(M);
    benchmark::DoNotOptimize(K);
  }
}
BENCHMARK(BM_KernelBasis)->Arg(8)->Arg(16);

static void BM_NormalFormWord(benchmark::State& state) {
  auto F = CycField::make(5);
  Word w = {Gen::E, Gen::E, Gen::F, Gen::F, Gen::E, Gen::F, Gen::K2, Gen::F};
  for (auto _ : state) {
    NFElement x = nf_monomial(*F, AlgebraId::DqB, F->one(), w);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_NormalFormWord);

static void BM_BuildAndVerifyProjective(benchmark::State& state) {
  auto F = CycField::make(state.range(0));
  Rng rng(4);
  FamilySpec s = draw_admissible(*F, Family::Pproj, rng);
  for (auto _ : state) {
    MatRep rep = build_module(*F, s);
    bool ok = verify_relations(rep).all_pass;
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_BuildAndVerifyProjective)->Arg(3)->Arg(5);

static void BM_EndomorphismSpace(benchmark::State& state) {
  auto F = CycField::make(3);
  Rng rng(5);
  MatRep P = build_module(*F, draw_admissible(*F, Family::Pproj, rng));
  for (auto _ : state) {
    auto endo = hom_space(P, P);
    benchmark::DoNotOptimize(endo);
  }
}
BENCHMARK(BM_EndomorphismSpace);

BENCHMARK_MAIN();
