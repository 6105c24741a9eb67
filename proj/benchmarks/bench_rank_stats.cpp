#include <benchmark/benchmark.h>

#include "arelab/model.hpp"
#include "arelab/rank_stats.hpp"
#include "arelab/rng.hpp"

namespace {

arelab::PairedSample random_sample(int n, std::uint64_t seed) {
    arelab::Rng rng(seed);
    arelab::PairedSample s;
    for (int i = 0; i < n; ++i) {
        s.x.push_back(rng.uniform());
        s.y.push_back(rng.uniform());
    }
    return s;
}

void BM_KendallFast(benchmark::State& state) {
    const auto s = random_sample(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(arelab::kendall_t(s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KendallFast)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_KendallBrute(benchmark::State& state) {
    const auto s = random_sample(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        const std::size_t n = s.size();
        long long acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                acc += arelab::h2_kernel(s.x[i], s.y[i], s.x[j], s.y[j]);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_KendallBrute)->Range(256, 4096);

void BM_Spearman(benchmark::State& state) {
    const auto s = random_sample(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(arelab::spearman_s(s));
}
BENCHMARK(BM_Spearman)->Range(256, 65536);

void BM_SpearmanUTilde(benchmark::State& state) {
    const auto s = random_sample(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(arelab::spearman_u_tilde(s));
}
BENCHMARK(BM_SpearmanUTilde)->Range(256, 16384);

}  // namespace
