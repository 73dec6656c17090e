#include <benchmark/benchmark.h>

#include <vector>

#include "tangle/classify.hpp"
#include "tangle/closed_form.hpp"
#include "tangle/oracle.hpp"
#include "tangle/relations.hpp"

namespace {

using namespace tangle;

std::vector<Amplitudes> haar_batch(std::size_t n) {
  Rng rng(7);
  std::vector<Amplitudes> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_state(rng));
  return out;
}

std::vector<AsdParams> asd_batch(std::size_t n) {
  Rng rng(11);
  std::vector<AsdParams> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_asd(rng));
  return out;
}

void BM_TanglesClosedForm(benchmark::State& state) {
  const auto batch = haar_batch(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tangles_closed_form(batch[i++ % batch.size()]));
}
BENCHMARK(BM_TanglesClosedForm);

void BM_TanglesAsd(benchmark::State& state) {
  const auto batch = asd_batch(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tangles_asd(batch[i++ % batch.size()]));
}
BENCHMARK(BM_TanglesAsd);

void BM_MeasureReport(benchmark::State& state) {
  const auto batch = haar_batch(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(measure_report(batch[i++ % batch.size()]));
}
BENCHMARK(BM_MeasureReport);

void BM_MeasuresOracle(benchmark::State& state) {
  const auto batch = haar_batch(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(measures_oracle(batch[i++ % batch.size()]));
}
BENCHMARK(BM_MeasuresOracle);

void BM_TangleOracleQuartic(benchmark::State& state) {
  const auto batch = haar_batch(64);
  std::vector<SpinFlippedPair> pairs;
  for (const auto& s : batch) pairs.push_back(spin_flip(partial_trace(density_matrix(s), {0, 1})));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eta_spectrum(pairs[i++ % pairs.size()]));
}
BENCHMARK(BM_TangleOracleQuartic);

void BM_TangleOracleHermitian(benchmark::State& state) {
  const auto batch = haar_batch(64);
  std::vector<DensityMatrix> rhos;
  for (const auto& s : batch) rhos.push_back(partial_trace(density_matrix(s), {0, 1}));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tangle_oracle(rhos[i++ % rhos.size()]));
}
BENCHMARK(BM_TangleOracleHermitian);

void BM_Classify(benchmark::State& state) {
  const auto batch = asd_batch(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(slocc_class_asd(batch[i++ % batch.size()]));
}
BENCHMARK(BM_Classify);

void BM_WClassMaximum(benchmark::State& state) {
  for (auto _ : state) {
    Rng rng(3);
    benchmark::DoNotOptimize(maximize_avg_entropy_w_class(rng, 20));
  }
}
BENCHMARK(BM_WClassMaximum)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
