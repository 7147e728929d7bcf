#include <benchmark/benchmark.h>

#include "dualknot/dimension.hpp"
#include "dualknot/prover.hpp"
#include "dualknot/slope.hpp"

using namespace dualknot;

static void BM_FareyResolve(benchmark::State& state) {
  const long q = state.range(0);
  Slope r0(2 * q + 1, q);
  for (auto _ : state) benchmark::DoNotOptimize(farey_resolve(r0));
}
BENCHMARK(BM_FareyResolve)->Arg(7)->Arg(97)->Arg(7919)->Arg(1000003);

static void BM_DimDualUnreduced(benchmark::State& state) {
  Slope r(61, 10);
  InvariantPair inv(2, 6);
  FieldSpec f2 = FieldSpec::f2();
  for (auto _ : state)
    benchmark::DoNotOptimize(dim_dual_unreduced(r, inv, f2));
}
BENCHMARK(BM_DimDualUnreduced);

static void BM_Certify(benchmark::State& state) {
  Slope r(state.range(0), 3);
  InvariantPair inv(2, 6);
  FieldSpec c0 = FieldSpec::char0();
  for (auto _ : state) benchmark::DoNotOptimize(certify(r, inv, c0));
}
BENCHMARK(BM_Certify)->Arg(7)->Arg(61)->Arg(601);

static void BM_CertifyAmbiguous(benchmark::State& state) {
  Slope r(2, 1);
  InvariantPair inv(2, 6);
  FieldSpec c0 = FieldSpec::char0();
  for (auto _ : state) benchmark::DoNotOptimize(certify(r, inv, c0));
}
BENCHMARK(BM_CertifyAmbiguous);

BENCHMARK_MAIN();
