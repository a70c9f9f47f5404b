#include <benchmark/benchmark.h>

#include "gwf/builders.hpp"
#include "gwf/gggr.hpp"

using namespace gwf;

namespace {

const BuiltInstance& sl2f5() {
  static BuiltInstance inst = build(builtinSpec("sl2", 5));
  return inst;
}

void BM_FourierTransform(benchmark::State& state) {
  const auto& A = *sl2f5().algebra;
  auto f = zeroFunction(A, 0, false);
  for (size_t i = 0; i < f.values.size(); ++i)
    f.values[i] = ScaledCyclotomic::integer(static_cast<long long>(i % 7) - 3,
                                            A.F->p(), A.F->q());
  for (auto _ : state) benchmark::DoNotOptimize(ft(A, f, int(state.range(0))));
}
BENCHMARK(BM_FourierTransform)->Arg(1)->Arg(4);

void BM_GroupClosure(benchmark::State& state) {
  for (auto _ : state) {
    auto inst = build(builtinSpec("sl2", int(state.range(0))));
    benchmark::DoNotOptimize(inst.group->order());
  }
}
BENCHMARK(BM_GroupClosure)->Arg(3)->Arg(5);

void BM_GammaDirect(benchmark::State& state) {
  const auto& inst = sl2f5();
  auto orbits = inst.group->nilpotentCoadjointOrbits(0);
  const auto& regular = orbits.back();
  for (auto _ : state)
    benchmark::DoNotOptimize(gammaDirect(*inst.algebra, *inst.group, regular,
                                         int(state.range(0))));
}
BENCHMARK(BM_GammaDirect)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
