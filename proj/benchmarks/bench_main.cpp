#include <benchmark/benchmark.h>

#include "osl/model_zoo.hpp"
#include "osl/proof_search.hpp"
#include "osl/semantics.hpp"

using namespace osl;

namespace {

void BM_FiniteProjection(benchmark::State& state) {
  FiniteOSpace space = classical_sets(static_cast<int>(state.range(0)));
  const auto& family = space.family();
  size_t i = 0;
  for (auto _ : state) {
    const FiniteFlat& a = family[i % family.size()];
    const FiniteFlat& b = family[(i * 7 + 3) % family.size()];
    benchmark::DoNotOptimize(space.project_set(a, b));
    ++i;
  }
}
BENCHMARK(BM_FiniteProjection)->Arg(3)->Arg(4)->Arg(6);

void BM_RationalProjection(benchmark::State& state) {
  RationalOSpace q2 = RationalOSpace::standard_q2();
  const auto& family = q2.flats();
  size_t i = 0;
  for (auto _ : state) {
    const Flat& a = family[i % family.size()];
    const Flat& b = family[(i * 5 + 2) % family.size()];
    benchmark::DoNotOptimize(q2.project(a, b));
    ++i;
  }
}
BENCHMARK(BM_RationalProjection);

void BM_FlatFamilyGeneration(benchmark::State& state) {
  FiniteOSpace space = powerset_space(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generate_flat_family(space.size(), space.orth_matrix(), {}));
  }
}
BENCHMARK(BM_FlatFamilyGeneration)->Arg(2)->Arg(3);

void BM_AxiomCheck(benchmark::State& state) {
  FiniteOSpace space = union_space(classical_sets(2), powerset_space(2));
  for (auto _ : state) benchmark::DoNotOptimize(space.check_axioms());
}
BENCHMARK(BM_AxiomCheck);

void BM_ParseSequent(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_sequent("p & (q | ~r), ~p |- q & p, r | ~q"));
}
BENCHMARK(BM_ParseSequent);

void BM_Validity(benchmark::State& state) {
  auto space = make_model("zoo:sets:2");
  Sequent s = parse_sequent("p, q |- q, p");
  for (auto _ : state) benchmark::DoNotOptimize(valid_in_model(*space, s));
}
BENCHMARK(BM_Validity);

void BM_ProofSearch(benchmark::State& state) {
  Sequent goal = parse_sequent("p & (q & r), ~r | ~q |-");
  SearchConfig cfg;
  cfg.max_depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prove(goal, cfg));
}
BENCHMARK(BM_ProofSearch)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
