#include <benchmark/benchmark.h>

#include "powg/certify.hpp"

using namespace powg;

namespace {

void BM_DnbTable(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(certify::dnb_table(3, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_DnbTable)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CertificatePair(benchmark::State& st) {
  const certify::CertificateQuery q{3, {1134, 2000}, {15120, 30240}, 3};
  for (auto _ : st) benchmark::DoNotOptimize(certify::check_certificate(q));
}
BENCHMARK(BM_CertificatePair)->Unit(benchmark::kMillisecond);

void BM_FactorialSandwich(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(certify::factorial_sandwich(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_FactorialSandwich)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
