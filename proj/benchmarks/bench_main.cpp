#include <benchmark/benchmark.h>

#include "hyperjump/cone.hpp"
#include "hyperjump/designs.hpp"
#include "hyperjump/lagrangian.hpp"
#include "hyperjump/sparsity.hpp"
#include "hyperjump/witness.hpp"

namespace hj = hyperjump;

namespace {

hj::ThreeGraph fano_double(int t) {
  const auto pair = hj::search_pair(t, 3, 1000, 1);
  return hj::edge_union(pair->first.triples, pair->second.triples);
}

void BM_CheckSparseExact(benchmark::State& state) {
  const hj::ThreeGraph g = hj::build_sts(static_cast<int>(state.range(0)), hj::default_method(static_cast<int>(state.range(0)))).triples;
  for (auto _ : state) benchmark::DoNotOptimize(hj::check_sparse(g).excess);
}
BENCHMARK(BM_CheckSparseExact)->Arg(9)->Arg(15)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_CheckSparseBrute(benchmark::State& state) {
  const hj::ThreeGraph g = hj::build_sts(9, hj::StsMethod::bose).triples;
  for (auto _ : state) benchmark::DoNotOptimize(hj::check_sparse(g, hj::SparsityMode::brute).excess);
}
BENCHMARK(BM_CheckSparseBrute)->Unit(benchmark::kMillisecond);

void BM_MaximizeLagrangian(benchmark::State& state) {
  const hj::ThreeGraph g = hj::build_cone(fano_double(static_cast<int>(state.range(0)))).graph;
  hj::LagrangianOptions opt;
  opt.restarts = 20;
  for (auto _ : state) benchmark::DoNotOptimize(hj::maximize_lagrangian(g, opt).numeric_max);
}
BENCHMARK(BM_MaximizeLagrangian)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_GridOracle(benchmark::State& state) {
  const hj::ThreeGraph g = hj::ThreeGraph::complete(5);
  for (auto _ : state) benchmark::DoNotOptimize(hj::grid_oracle(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GridOracle)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_SearchPair(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hj::search_pair(static_cast<int>(state.range(0)), 4, 500, 7));
  }
}
BENCHMARK(BM_SearchPair)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_WitnessPipeline(benchmark::State& state) {
  hj::WitnessOptions opt;
  opt.max_attempts = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hj::run_witness_pipeline(static_cast<int>(state.range(0)), 4, 7, opt).certificate.valid);
  }
}
BENCHMARK(BM_WitnessPipeline)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_TauThreshold(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hj::check_tau_threshold(100, 1, 10'000).violations);
}
BENCHMARK(BM_TauThreshold)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
