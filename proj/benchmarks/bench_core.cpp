// Microbenchmarks for the exact kernels: full-spectrum character transforms,
// convolution, difference counting, and whole-scheme amorphy certification.

#include <benchmark/benchmark.h>

#include <random>

#include "amorph/constructions.hpp"
#include "amorph/group.hpp"
#include "amorph/scheme.hpp"

using namespace amorph;

namespace {

SubsetIndicator random_symmetric(const GroupSpec& g, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  SubsetIndicator s(g);
  for (uint64_t x = 1; x < g.order(); ++x) {
    const uint64_t nx = g.neg_rank(x);
    if (nx < x) continue;
    if (coin(rng)) {
      s.insert(x);
      s.insert(nx);
    }
  }
  return s;
}

}  // namespace

static void BM_TransformZ2_16(benchmark::State& state) {
  const GroupSpec g(std::vector<uint32_t>(16, 2));  // order 65536
  const auto s = random_symmetric(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(all_character_sums(s));
}
BENCHMARK(BM_TransformZ2_16)->Unit(benchmark::kMillisecond);

static void BM_TransformZ4sqZ2_4(benchmark::State& state) {
  const GroupSpec g({4, 4, 2, 2, 2, 2});
  const auto s = random_symmetric(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(all_character_sums(s));
}
BENCHMARK(BM_TransformZ4sqZ2_4)->Unit(benchmark::kMicrosecond);

static void BM_TransformZ3_8(benchmark::State& state) {
  const GroupSpec g(std::vector<uint32_t>(8, 3));  // order 6561
  const auto s = random_symmetric(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(all_character_sums(s));
}
BENCHMARK(BM_TransformZ3_8)->Unit(benchmark::kMillisecond);

static void BM_DirectSumsZ5_4(benchmark::State& state) {
  const GroupSpec g({5, 5, 5, 5});  // exponent 5: per-label path
  const auto s = random_symmetric(g, 4);
  for (auto _ : state) benchmark::DoNotOptimize(all_character_sums(s));
}
BENCHMARK(BM_DirectSumsZ5_4)->Unit(benchmark::kMillisecond);

static void BM_ConvolveZ3_8(benchmark::State& state) {
  const GroupSpec g(std::vector<uint32_t>(8, 3));
  const auto a = random_symmetric(g, 5), b = random_symmetric(g, 6);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b));
}
BENCHMARK(BM_ConvolveZ3_8)->Unit(benchmark::kMillisecond);

static void BM_DifferenceCountsZ2_8(benchmark::State& state) {
  const GroupSpec g(std::vector<uint32_t>(8, 2));
  const auto s = random_symmetric(g, 7);
  for (auto _ : state) benchmark::DoNotOptimize(difference_counts(s));
}
BENCHMARK(BM_DifferenceCountsZ2_8)->Unit(benchmark::kMicrosecond);

static void BM_AmorphyFourClass(benchmark::State& state) {
  const auto fc = four_class_scheme(2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_amorphic(fc.scheme));
}
BENCHMARK(BM_AmorphyFourClass)->Unit(benchmark::kMillisecond);

static void BM_AmorphyRotationQ3(benchmark::State& state) {
  const auto rot = rotation_scheme(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_amorphic(rot.scheme));
}
BENCHMARK(BM_AmorphyRotationQ3)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
