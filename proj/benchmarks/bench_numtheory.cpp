#include <benchmark/benchmark.h>

#include "powg/numtheory.hpp"
#include "powg/psi.hpp"

using namespace powg;

namespace {

void BM_LcmRange(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(nt::lcm_range(static_cast<std::uint64_t>(st.range(0))));
}
BENCHMARK(BM_LcmRange)->Arg(81)->Arg(1000)->Arg(100'000)->Unit(benchmark::kMicrosecond);

void BM_LcmSweep(benchmark::State& st) {
  const auto n = static_cast<std::uint64_t>(st.range(0));
  for (auto _ : st) {
    nt::LcmSweep s(n);
    for (std::uint64_t i = 2; i <= n; ++i) s.advance_to(i);
    benchmark::DoNotOptimize(s.value());
  }
}
BENCHMARK(BM_LcmSweep)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_PowerDecompose(benchmark::State& st) {
  Natural u;
  mpz_ui_pow_ui(u.get_mpz_t(), 15, static_cast<unsigned long>(st.range(0)));
  u <<= 7;
  for (auto _ : st) benchmark::DoNotOptimize(nt::power_decompose(u));
}
BENCHMARK(BM_PowerDecompose)->Arg(12)->Arg(360)->Arg(5040);

void BM_NuPFactorial(benchmark::State& st) {
  Natural m = 1;
  m <<= static_cast<mp_bitcnt_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(nt::nu_p_factorial(Natural(3), m));
}
BENCHMARK(BM_NuPFactorial)->Arg(16)->Arg(256);

}  // namespace
