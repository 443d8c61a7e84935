#include <benchmark/benchmark.h>

#include <random>

#include "kpair/codes.hpp"
#include "kpair/f2.hpp"
#include "kpair/locc.hpp"
#include "kpair/pairability.hpp"
#include "kpair/search.hpp"
#include "kpair/stabsim.hpp"

namespace {

using namespace kpair;

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  f2::BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng() & 1U) m.row(i).set(j);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(f2::rank(m));
}
BENCHMARK(BM_Rank)->Arg(64)->Arg(256)->Arg(1024);

void BM_CssState(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto code = codes::rm_code(m / 4, m);
  for (auto _ : state) benchmark::DoNotOptimize(stabsim::css_state(code));
}
BENCHMARK(BM_CssState)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_RmTwoPairProtocol(benchmark::State& state) {
  const auto code = codes::rm_code(1, 4);
  const PairList pairs = {{0, 15}, {1, 2}};
  const auto plan = pairability::plan_rm_pairing(code, pairs, 4);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(locc::run_protocol(code, plan.pattern, pairs, *plan.certificate, seed++));
  }
}
BENCHMARK(BM_RmTwoPairProtocol);

void BM_WheelSearch(benchmark::State& state) {
  const auto wheel = search::graph_state_of(search::wheel_graph());
  const auto bases = search::parse_bases("XYZ");
  for (auto _ : state) benchmark::DoNotOptimize(search::verify_2_pairable(wheel, bases, true, 1));
}
BENCHMARK(BM_WheelSearch)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
