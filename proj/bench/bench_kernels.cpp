#include "plasmon/spectra.hpp"
#include "plasmon/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace plasmon;

namespace {

const SystemModel& ring_model() {
    static const SystemModel m(material_preset("silver-drude"), SphereGeometry{nm_to_m(8)},
                               ring_emitters(20, nm_to_m(8), nm_to_m(2), debye_to_cm(24), Orientation::Theta), 30);
    return m;
}

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_SpectralMap(benchmark::State& state) {
    const SystemModel& m = ring_model();
    const BrightSector bs = m.bright_sector();
    const auto w0s = linear_grid(ev_to_rad_s(2.5), ev_to_rad_s(3.3), 81);
    const auto omega = linear_grid(ev_to_rad_s(2.4), ev_to_rad_s(3.4), 400);
    const RateFn rate = [&](double w) { return m.gamma0(w); };
    for (auto _ : state) benchmark::DoNotOptimize(spectral_map(bs, w0s, omega, rate, mode(state)));
    state.SetItemsProcessed(state.iterations() * w0s.size() * omega.size());
}

void BM_SweepBranches(benchmark::State& state) {
    const SystemModel& m = ring_model();
    const BrightSector bs = m.bright_sector();
    const auto w0s = linear_grid(ev_to_rad_s(2.3), ev_to_rad_s(3.8), 1501);
    const RateFn rate = [&](double w) { return m.gamma0(w); };
    for (auto _ : state) benchmark::DoNotOptimize(sweep_branches(bs, w0s, rate, mode(state)));
    state.SetItemsProcessed(state.iterations() * w0s.size());
}

void BM_SpectrumContinuous(benchmark::State& state) {
    const SystemModel& m = ring_model();
    const ContinuousKernel ck(m.kernel(), m.modes());
    const double w0 = ev_to_rad_s(2.9);
    const auto omega = linear_grid(ev_to_rad_s(2.4), ev_to_rad_s(3.4), 500);
    const Eigen::VectorXcd a = Eigen::VectorXcd::Ones(m.n_emitters());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            spectrum_continuous(ck, a, w0, m.gamma0(w0), omega, KernelRoute::Corrected, mode(state)));
    state.SetItemsProcessed(state.iterations() * omega.size());
}

}  // namespace

BENCHMARK(BM_SpectralMap)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepBranches)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumContinuous)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
