#include <benchmark/benchmark.h>

#include <random>

#include "qcb/geometry.hpp"
#include "qcb/localdisc.hpp"
#include "qcb/multicopy.hpp"
#include "qcb/parallel.hpp"

using namespace qcb;

namespace {

const QubitState kA(0.9, 0.0, 0.0);
const QubitState kB(0.0, 0.9, 0.0);

void BM_HelstromNcopySerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(helstrom_ncopy_qubit_serial(kA, kB, n));
}

void BM_HelstromNcopyParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(helstrom_ncopy_qubit(kA, kB, n));
}

void BM_DccSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(d_cc_qubit_serial(kA, kB).s_star);
}

void BM_DccParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(d_cc_qubit(kA, kB).s_star);
}

double sample_one(std::size_t i) {
  std::seed_seq seq{std::uint64_t{42}, static_cast<std::uint64_t>(i)};
  std::mt19937_64 rng(seq);
  return sample_density_qc(3, rng).purity();
}

void BM_SamplingSerial(benchmark::State& st) {
  sample_one(0);  // envelope constant is computed once per d
  for (auto _ : st) benchmark::DoNotOptimize(serial_map<double>(st.range(0), sample_one));
}

void BM_SamplingParallel(benchmark::State& st) {
  sample_one(0);
  for (auto _ : st) benchmark::DoNotOptimize(parallel_map<double>(st.range(0), sample_one));
}

}  // namespace

BENCHMARK(BM_HelstromNcopySerial)->Arg(16)->Arg(35)->Arg(64);
BENCHMARK(BM_HelstromNcopyParallel)->Arg(16)->Arg(35)->Arg(64);
BENCHMARK(BM_DccSerial);
BENCHMARK(BM_DccParallel);
BENCHMARK(BM_SamplingSerial)->Arg(1000);
BENCHMARK(BM_SamplingParallel)->Arg(1000);

BENCHMARK_MAIN();
