#include <benchmark/benchmark.h>

#include "braidvar/cluster.hpp"
#include "braidvar/mcs.hpp"
#include "braidvar/variety.hpp"

using namespace braidvar;

namespace {

const BraidWord& squared() {
  static const BraidWord b = parse_braid("1,1,2,2,1,1,2,2", 3);
  return b;
}

void BM_BruteForceCount(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_count(squared(), q));
}
BENCHMARK(BM_BruteForceCount)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_VerifyDecomposition(benchmark::State& state) {
  BraidWord b = parse_braid("1,2,1,2,1,2,2,1,2", 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(b, 3));
}
BENCHMARK(BM_VerifyDecomposition)->Unit(benchmark::kMillisecond);

void BM_ClusterSeed(benchmark::State& state) {
  Morphism m = build_right_simplifying(squared(), maximal_ruling(squared()));
  for (auto _ : state) benchmark::DoNotOptimize(cluster_seed(m));
}
BENCHMARK(BM_ClusterSeed)->Unit(benchmark::kMillisecond);

void BM_AToSR(benchmark::State& state) {
  NormalRuling rho = maximal_ruling(squared());
  std::vector<Scalar> z;
  for (int k = 1; k <= squared().length(); ++k) z.push_back(Scalar::var(zvar(k)));
  for (auto _ : state) benchmark::DoNotOptimize(a_to_sr(rho, z));
}
BENCHMARK(BM_AToSR)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
