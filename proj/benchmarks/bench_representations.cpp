#include <benchmark/benchmark.h>

#include "nilrep/canonical_form.hpp"
#include "nilrep/fixtures.hpp"
#include "nilrep/gluing.hpp"
#include "nilrep/moduli.hpp"

using namespace nilrep;

static void BM_FreeNilpotent(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(free_nilpotent(2, state.range(0)));
}
BENCHMARK(BM_FreeNilpotent)->DenseRange(2, 5);

static void BM_CanonicalForm(benchmark::State& state) {
  const size_t n = state.range(0);
  auto g = std::make_shared<const LieAlgebra>(strictly_upper_algebra(n));
  const Representation base = natural_rep(g, n);
  for (auto _ : state) {
    Representation r(g, base.matrices());
    benchmark::DoNotOptimize(canonical_form(r));
  }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 5);

static void BM_AInvariant(benchmark::State& state) {
  auto g = std::make_shared<const LieAlgebra>(strictly_upper_algebra(4));
  for (auto _ : state) benchmark::DoNotOptimize(a_invariant(g, state.range(0)));
}
BENCHMARK(BM_AInvariant)->DenseRange(2, 4);

static void BM_H2(benchmark::State& state) {
  LieAlgebra g = free_nilpotent(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h2_dimension(g));
}
BENCHMARK(BM_H2)->DenseRange(2, 4);

static void BM_GlueTruncation(benchmark::State& state) {
  Fixture fx = make_fixture("n4");
  const Representation& s = fx.reps.front().second;
  Representation r = subquotient(s, 0, s.n() - 1), rp = subquotient(s, 1, s.n());
  for (auto _ : state) benchmark::DoNotOptimize(glue(r, rp));
}
BENCHMARK(BM_GlueTruncation);
BENCHMARK_MAIN();
