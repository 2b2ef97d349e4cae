#include <benchmark/benchmark.h>

#include "opdcat/operad.hpp"
#include "opdcat/tmonad.hpp"

using namespace opdcat;

static ObjOverI disc_over(const TruncatedOperad& T, int n) {
  FinCatBuilder b;
  for (int i = 0; i < n; ++i) b.add_object("x" + std::to_string(i));
  return over_discrete(T, b.finalize(), std::vector<int>(n, 0));
}

static void BM_apply_T(benchmark::State& state) {
  TruncatedOperad T = ass_operad((int)state.range(0));
  ObjOverI X = disc_over(T, 2);
  for (auto _ : state) benchmark::DoNotOptimize(apply_T(T, X).TX->n_arrows());
}
BENCHMARK(BM_apply_T)->Arg(2)->Arg(3)->Arg(4);

static void BM_quotient(benchmark::State& state) {
  TruncatedOperad T = ass_operad((int)state.range(0));
  ObjOverI X = disc_over(T, 2);
  LabelledOpCategory TX = apply_T(T, X);
  for (auto _ : state) benchmark::DoNotOptimize(quotient(TX).Q->n_objects());
}
BENCHMARK(BM_quotient)->Arg(2)->Arg(3)->Arg(4);

static void BM_monad_laws(benchmark::State& state) {
  TruncatedOperad T = com_operad((int)state.range(0));
  ObjOverI X = disc_over(T, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_monad_laws(T, X).assoc_objects);
}
BENCHMARK(BM_monad_laws)->Arg(2)->Arg(3);

static void BM_to_polynomial(benchmark::State& state) {
  TruncatedOperad T = ass_operad((int)state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(to_polynomial(T).M.carrier.B->n_arrows());
}
BENCHMARK(BM_to_polynomial)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
