#include <benchmark/benchmark.h>

#include <random>

#include "nilrep/matrix.hpp"

using namespace nilrep;

namespace {

Matrix random_matrix(const Field& f, size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = Scalar(f, Rational(d(rng), 1 + static_cast<long>(rng() % 4)));
  return m;
}

}  // namespace

static void BM_RrefRational(benchmark::State& state) {
  Matrix m = random_matrix(Field::rationals(), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->RangeMultiplier(2)->Range(4, 32);

static void BM_RrefQuadratic(benchmark::State& state) {
  Matrix m = random_matrix(Field::parse_extension("i^2+1"), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefQuadratic)->RangeMultiplier(2)->Range(4, 16);

static void BM_Inverse(benchmark::State& state) {
  Matrix m = random_matrix(Field::rationals(), state.range(0), 11);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(m));
}
BENCHMARK(BM_Inverse)->RangeMultiplier(2)->Range(4, 16);
