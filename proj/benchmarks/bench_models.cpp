#include <benchmark/benchmark.h>

#include "arelab/asymptotics.hpp"
#include "arelab/models.hpp"
#include "arelab/normal.hpp"

namespace {

void BM_PlackettCdf(benchmark::State& state) {
    double u = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(arelab::plackett_cdf(1.3, u, 0.42));
        u = u < 0.9 ? u + 1e-6 : 0.1;
    }
}
BENCHMARK(BM_PlackettCdf);

void BM_BvnCdf(benchmark::State& state) {
    double x = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(arelab::bvn_cdf(0.5, x, 0.3));
        x = x < 2.0 ? x + 1e-5 : -2.0;
    }
}
BENCHMARK(BM_BvnCdf);

void BM_MicdCdf(benchmark::State& state) {
    const auto& ol = arelab::find_model("micd-ol");
    double u = -0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ol.cdf(0.3, u, 0.1));
        u = u < 0.5 ? u + 1e-6 : -0.5;
    }
}
BENCHMARK(BM_MicdCdf);

void BM_SampleModel(benchmark::State& state) {
    const auto& model = arelab::find_model(state.range(0) == 0 ? "plackett" : "micd-ol");
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.sample(0.4, 1024, ++seed));
    }
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_SampleModel)->Arg(0)->Arg(1);

void BM_MuT(benchmark::State& state) {
    const auto& model =
        arelab::find_model(state.range(0) == 0 ? "plackett" : "micd-os");
    for (auto _ : state) benchmark::DoNotOptimize(arelab::mu_t(model, 0.4));
}
BENCHMARK(BM_MuT)->Arg(0)->Arg(1);

void BM_Sigma2S(benchmark::State& state) {
    const auto& model = arelab::find_model("micd-os");
    for (auto _ : state) benchmark::DoNotOptimize(arelab::sigma2_s(model, 0.4));
}
BENCHMARK(BM_Sigma2S);

}  // namespace

BENCHMARK_MAIN();
