#include <benchmark/benchmark.h>

#include "pairops/core_hull.hpp"

using namespace pairops;

namespace {

SemigroupAlgebra alg23(int N, uint32_t p = 2) {
  return SemigroupAlgebra(NumericalSemigroup({2, 3}), PrimeField(p), N);
}

void BM_colon_lemma_batch(benchmark::State& state) {
  const SemigroupAlgebra alg = alg23(static_cast<int>(state.range(0)));
  const SemigroupIdeal J =
      SemigroupIdeal::from_class(alg, {IdealClass::Kind::TwoGen, 3, 0});
  std::vector<SemigroupIdeal> ideals;
  for (int n = 2; n <= 8; ++n)
    ideals.push_back(
        SemigroupIdeal::from_class(alg, {IdealClass::Kind::TwoGen, n, 0}));
  for (auto _ : state) {
    for (const auto& I : ideals) benchmark::DoNotOptimize(I.colon(J));
  }
}
BENCHMARK(BM_colon_lemma_batch)->Arg(20)->Arg(26);

void BM_enumerate_ideals(benchmark::State& state) {
  const SemigroupAlgebra alg = alg23(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(alg));
}
BENCHMARK(BM_enumerate_ideals)->Arg(8)->Arg(10)->Arg(12);

void BM_dualize_sweep(benchmark::State& state) {
  const SemigroupAlgebra alg = alg23(8);
  const DualityBridge br(alg);
  const LinearContext dual = LinearContext::build(br.dual());
  const PairOp d =
      dualize_primal_op(op_jbf(br.primal(), maximal_ideal(alg).space(), "m"), br);
  for (auto _ : state) {
    for (size_t j = 0; j < dual.lattice.size(); ++j)
      for (size_t i = 0; i < dual.lattice.size(); ++i)
        if (dual.lattice[j].contains(dual.lattice[i]))
          benchmark::DoNotOptimize(d(dual.lattice[i], dual.lattice[j]));
  }
}
BENCHMARK(BM_dualize_sweep);

void BM_ratliff_rush(benchmark::State& state) {
  const MonomialIdeal I =
      MonomialIdeal::from_generators({{4, 0}, {3, 1}, {1, 3}, {0, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(ratliff_rush(I));
}
BENCHMARK(BM_ratliff_rush);

void BM_newton_closure(benchmark::State& state) {
  const MonomialIdeal I =
      MonomialIdeal::from_generators({{7, 0}, {5, 2}, {2, 4}, {0, 6}});
  for (auto _ : state) benchmark::DoNotOptimize(I.integral_closure());
}
BENCHMARK(BM_newton_closure);

void BM_core_descent(benchmark::State& state) {
  const SemigroupAlgebra alg = alg23(static_cast<int>(state.range(0)));
  const LinearModule V(alg, false);
  const PairOp cl = op_jbf(V, maximal_ideal(alg).space(), "m");
  const Subspace N =
      SemigroupIdeal::from_class(alg, {IdealClass::Kind::TwoGen, 4, 0}).space();
  for (auto _ : state)
    benchmark::DoNotOptimize(core_descent(cl, N, V.full(), V));
}
BENCHMARK(BM_core_descent)->Arg(14)->Arg(20)->Arg(26);

void BM_property_report(benchmark::State& state) {
  const SemigroupAlgebra alg = alg23(8);
  const LinearModule V(alg, false);
  const LinearContext ctx = LinearContext::build(V);
  const PairOp cl = op_jbf(V, maximal_ideal(alg).space(), "m");
  for (auto _ : state) benchmark::DoNotOptimize(check_properties(cl, ctx));
}
BENCHMARK(BM_property_report);

}  // namespace

BENCHMARK_MAIN();
