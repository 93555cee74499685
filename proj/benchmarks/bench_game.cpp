#include <benchmark/benchmark.h>

#include "powg/exactsolve.hpp"
#include "powg/strategies.hpp"

using namespace powg;

namespace {

Natural N(std::uint64_t x) { return Natural(static_cast<unsigned long>(x)); }

void BM_IsLost(benchmark::State& st) {
  std::vector<Natural> v;
  for (std::int64_t i = 0; i < st.range(0); ++i) v.push_back(Natural(1) << static_cast<mp_bitcnt_t>(3 * i));
  const Position p(v);
  for (auto _ : st) benchmark::DoNotOptimize(is_lost(p));
}
BENCHMARK(BM_IsLost)->Arg(4)->Arg(16)->Arg(32);

void BM_BadSet(benchmark::State& st) {
  const Position p{N(3), N(64), N(4096), N(static_cast<std::uint64_t>(st.range(0)))};
  for (auto _ : st) benchmark::DoNotOptimize(exact::bad_set(p));
}
BENCHMARK(BM_BadSet)->Arg(2304)->Arg(1'000'003);

void BM_WinsInOne(benchmark::State& st) {
  std::uint64_t u = 3;
  for (auto _ : st) {
    benchmark::DoNotOptimize(exact::wins_in_one(Position{N(u)}));
    if (++u > 50'000) u = 3;
  }
}
BENCHMARK(BM_WinsInOne);

void BM_SolveTwoRounds(benchmark::State& st) {
  for (auto _ : st) {
    exact::Solver s;
    benchmark::DoNotOptimize(s.solve(Position{N(static_cast<std::uint64_t>(st.range(0)))}, 2));
  }
}
BENCHMARK(BM_SolveTwoRounds)->Arg(3)->Arg(1000)->Arg(2303);

void BM_Solve2304(benchmark::State& st) {
  for (auto _ : st) {
    exact::Solver s;
    benchmark::DoNotOptimize(s.solve(Position{N(2304)}, 3));
  }
}
BENCHMARK(BM_Solve2304)->Unit(benchmark::kMillisecond);

void BM_VerifyRootProbe(benchmark::State& st) {
  const auto u = N(static_cast<std::uint64_t>(st.range(0)));
  const auto c = strategies::challenger_root_probe(u);
  for (auto _ : st) benchmark::DoNotOptimize(strategies::verify_round_bound(c, Position{u}, *c.claimed_bound));
}
BENCHMARK(BM_VerifyRootProbe)->Arg(75)->Arg(225)->Unit(benchmark::kMicrosecond);

}  // namespace
