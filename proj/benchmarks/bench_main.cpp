#include <benchmark/benchmark.h>

#include <random>

#include "braidfold/compile.hpp"
#include "braidfold/cover.hpp"
#include "braidfold/knot.hpp"
#include "braidfold/movie.hpp"
#include "braidfold/orient.hpp"
#include "braidfold/perm.hpp"
#include "generators.hpp"

using namespace braidfold;

namespace {

void BM_ReduceWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  const Word w = testgen::random_word(rng, n, 4 * n * n);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_word({n, w}));
}
BENCHMARK(BM_ReduceWord)->Arg(5)->Arg(9)->Arg(15);

void BM_CoverInvariants(benchmark::State& state) {
  std::mt19937 rng(11);
  std::vector<Chart> charts;
  for (int i = 0; i < 32; ++i) charts.push_back(testgen::random_chart(rng, 5, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cover_invariants(charts[i++ % charts.size()]));
}
BENCHMARK(BM_CoverInvariants)->Arg(8)->Arg(32);

void BM_SheetTraceOracle(benchmark::State& state) {
  std::mt19937 rng(11);
  std::vector<Chart> charts;
  for (int i = 0; i < 32; ++i) charts.push_back(testgen::random_chart(rng, 5, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sheet_trace_oracle(charts[i++ % charts.size()]));
}
BENCHMARK(BM_SheetTraceOracle)->Arg(8)->Arg(32);

void BM_CompileChart(benchmark::State& state) {
  std::mt19937 rng(3);
  const int n = static_cast<int>(state.range(0));
  std::vector<Chart> charts;
  for (int i = 0; i < 16; ++i) charts.push_back(testgen::random_dihedral_chart(rng, n, 10));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(compile_chart(charts[i++ % charts.size()]));
}
BENCHMARK(BM_CompileChart)->Arg(5)->Arg(7)->Arg(9);

void BM_FoxColorings(benchmark::State& state) {
  const KnotDiagram d = braid_closure(2, Word(5, 1));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fox_colorings(d, n));
}
BENCHMARK(BM_FoxColorings)->Arg(5)->Arg(15);

void BM_VerifyT25Movie(benchmark::State& state) {
  const ChartMovie m = replay_t25_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(verify_movie(m));
}
BENCHMARK(BM_VerifyT25Movie)->Unit(benchmark::kMillisecond);

void BM_AttemptOrientation(benchmark::State& state) {
  std::mt19937 rng(5);
  std::vector<Chart> charts;
  for (int i = 0; i < 16; ++i) charts.push_back(testgen::random_chart(rng, 4, 6));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(attempt_orientation(charts[i++ % charts.size()]));
}
BENCHMARK(BM_AttemptOrientation);

}  // namespace
BENCHMARK_MAIN();
