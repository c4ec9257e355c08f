#include <benchmark/benchmark.h>

#include "scc/divided_diff.hpp"
#include "scc/heat.hpp"
#include "scc/rng.hpp"

using namespace scc;

namespace {

CycleDescriptor bench_model(Rng& rng, int p, int q, int k) {
  std::vector<SuperMatrix> gens;
  for (int i = 0; i < k; ++i) gens.push_back(rng.hermitian(p, q).even_part());
  return matrix_model_build(p, q, k, gens);
}

void BM_duhamel_coeff(benchmark::State& state) {
  Rng rng(1, "bench_dd");
  int n = static_cast<int>(state.range(0));
  DuhamelRequest req;
  for (int j = 0; j <= n; ++j) req.nodes.push_back(rng.uniform(0.0, 4.0));
  req.t = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(duhamel_coeff(req));
}
BENCHMARK(BM_duhamel_coeff)->Arg(1)->Arg(3)->Arg(6);

void BM_model_mul(benchmark::State& state) {
  Rng rng(2, "bench_mul");
  int d = static_cast<int>(state.range(0));
  // keep a unit component so the product never collapses by theta degree
  ModelElement a = rng.model_element(d, d, 4, 6) + ModelElement::unit(d, d, 4);
  ModelElement b = rng.model_element(d, d, 4, 6) + ModelElement::unit(d, d, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_model_mul)->Arg(2)->Arg(4)->Arg(8);

void BM_heat_oracle(benchmark::State& state) {
  Rng rng(3, "bench_heat");
  int d = static_cast<int>(state.range(0));
  CycleDescriptor cyc = bench_model(rng, d, d, 2);
  HeatFrame f = heat_frame(cyc, rng.odd_hermitian(d, d));
  for (auto _ : state) benchmark::DoNotOptimize(heat_oracle(f, 0.7, 0.9));
}
BENCHMARK(BM_heat_oracle)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
