#include <benchmark/benchmark.h>

#include "sl2cat/crystal.hpp"
#include "sl2cat/crystal_q.hpp"
#include "sl2cat/graded_o.hpp"
#include "sl2cat/karoubi.hpp"
#include "sl2cat/planar_matching.hpp"
#include "sl2cat/rat_matrix.hpp"

namespace {

sl2cat::RatMatrix dense_matrix(int n) {
  sl2cat::RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = sl2cat::Rational((i * 7 + j * 13) % 11 - 5, (i + j) % 4 + 1);
  return m;
}

void EnumerateMatchings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto all = sl2cat::enumerate_matchings(n, n);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(EnumerateMatchings)->DenseRange(2, 6);

void ComposeDiagrams(benchmark::State& state) {
  const auto basis = sl2cat::enumerate_matchings(4, 4);
  for (auto _ : state) {
    for (const auto& f : basis)
      for (const auto& g : basis) {
        auto r = sl2cat::compose(g, f);
        benchmark::DoNotOptimize(r);
      }
  }
}
BENCHMARK(ComposeDiagrams);

void Rref(benchmark::State& state) {
  const auto m = dense_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = sl2cat::rref(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(Rref)->Arg(10)->Arg(30)->Arg(60);

void TensorPowerDecompose(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto dec = sl2cat::decompose(sl2cat::tensor_power(sl2cat::Crystal::b(1), m));
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(TensorPowerDecompose)->DenseRange(2, 8);

void EvalDiagram(benchmark::State& state) {
  const auto basis = sl2cat::enumerate_matchings(4, 4);
  for (auto _ : state) {
    for (const auto& d : basis) {
      auto m = sl2cat::eval_diagram(d);
      benchmark::DoNotOptimize(m);
    }
  }
}
BENCHMARK(EvalDiagram);

void DecomposeObject(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto fam = sl2cat::decompose_object(m);
    benchmark::DoNotOptimize(fam);
  }
}
BENCHMARK(DecomposeObject)->DenseRange(1, 4);

void ActOnSample(benchmark::State& state) {
  const auto samples = sl2cat::sample_objects(7, 3);
  const auto basis = sl2cat::enumerate_matchings(2, 2);
  for (auto _ : state) {
    for (const auto& x : samples)
      for (const auto& d : basis) {
        auto m = sl2cat::act(sl2cat::HomElement::single(d), x);
        benchmark::DoNotOptimize(m);
      }
  }
}
BENCHMARK(ActOnSample);

void VerifyRelationsSample(benchmark::State& state) {
  const auto samples = sl2cat::sample_objects(11, 8);
  for (auto _ : state) {
    auto rep = sl2cat::verify_relations(samples);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(VerifyRelationsSample);

}  // namespace

BENCHMARK_MAIN();
