#include <levysmile/blackscholes.hpp>
#include <levysmile/fourier.hpp>
#include <levysmile/smile.hpp>

#include <benchmark/benchmark.h>

using namespace levysmile;

namespace {

const ModelSpec& nig() {
    static const ModelSpec m(NigParams{8.5, 2.0, 1.1});
    return m;
}
const ModelSpec& kou() {
    static const ModelSpec m(KouParams{1.0, 15.5, 0.219, 7.11, 9.0});
    return m;
}
const ModelSpec& cgmy() {
    static const ModelSpec m(CgmyParams{1.0, 5.0, 5.0, 0.5});
    return m;
}

// Maturity passed as T * 1e4 so the range shows up in the benchmark name.
void BM_DigitalNig(benchmark::State& state) {
    const double T = static_cast<double>(state.range(0)) * 1e-4;
    for (auto _ : state) benchmark::DoNotOptimize(digital_price(nig(), 0.0, T));
}
BENCHMARK(BM_DigitalNig)->Arg(1)->Arg(100)->Arg(1000);

void BM_DigitalCgmy(benchmark::State& state) {
    const double T = static_cast<double>(state.range(0)) * 1e-4;
    for (auto _ : state) benchmark::DoNotOptimize(digital_price(cgmy(), 0.0, T));
}
BENCHMARK(BM_DigitalCgmy)->Arg(1)->Arg(100)->Arg(1000);

void BM_CallKou(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(call_price(kou(), 0.1, 0.01));
}
BENCHMARK(BM_CallKou);

void BM_ImpliedVol(benchmark::State& state) {
    const double price = bs_otm_price(0.35, 0.2, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(implied_vol_otm(price, 0.2, 0.5));
}
BENCHMARK(BM_ImpliedVol);

void BM_SmileNig(benchmark::State& state) {
    const auto grid = linear_grid(-0.5, 0.5, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_smile(nig(), 0.1, grid));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SmileNig)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
