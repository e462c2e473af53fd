// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "relaylink/analytic.hpp"
#include "relaylink/model.hpp"
#include "relaylink/montecarlo.hpp"
#include "relaylink/specfun.hpp"

namespace {

using namespace relaylink;

SystemParams params(int n, int m, double rho1_db = 10.0, double rho_int = 1.0) {
    SystemParams p;
    p.n = n;
    p.m = m;
    p.rho1 = db_to_linear(rho1_db);
    p.rho2 = p.rho1;
    p.gamma_th = 1.0;
    p.rho_i.assign(static_cast<std::size_t>(m), rho_int);
    return p;
}

void BM_ScaledBesselRow(benchmark::State& state) {
    const int vmax = static_cast<int>(state.range(0));
    std::vector<double> row(static_cast<std::size_t>(vmax) + 3);
    for (auto _ : state) {
        specfun::scaled_bessel_k_row(-2, vmax, 3.7, row.data());
        benchmark::DoNotOptimize(row.data());
    }
}
BENCHMARK(BM_ScaledBesselRow)->Arg(4)->Arg(16);

void BM_Gauss2f1(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::gauss_2f1_family(3, 2, z));
    }
}
// Below and above the series/transform switchover.
BENCHMARK(BM_Gauss2f1)->Arg(8)->Arg(400);

void BM_CertifiedQuadrature(benchmark::State& state) {
    for (auto _ : state) {
        auto r = specfun::integrate_semi_infinite(
            [](double x) { return x * std::exp(-x); }, 1e-10);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_CertifiedQuadrature);

void BM_ExactOutage(benchmark::State& state) {
    const auto scheme = static_cast<Scheme>(state.range(0));
    const auto p = params(3, 2);
    const auto prof = build_profile(p.rho_i);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            analytic::evaluate_outage(scheme, analytic::Method::Exact, p, 1e-8)
                .probability);
    }
    benchmark::DoNotOptimize(&prof);
}
BENCHMARK(BM_ExactOutage)
    ->Arg(static_cast<int>(Scheme::Mrc))
    ->Arg(static_cast<int>(Scheme::Zf))
    ->Arg(static_cast<int>(Scheme::Mmse));

void BM_FirstHopCdf(benchmark::State& state) {
    const auto p = params(3, 2);
    double z = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(analytic::cdf_z_unified(p, z));
        z = z < 40.0 ? z + 0.7 : 0.1;
    }
}
BENCHMARK(BM_FirstHopCdf);

void BM_TrialSinr(benchmark::State& state) {
    const auto scheme = static_cast<Scheme>(state.range(0));
    const auto p = params(3, 2);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        const auto d = montecarlo::draw_channel(p, 17, trial++);
        benchmark::DoNotOptimize(montecarlo::sinr_scheme(d, p, scheme).gamma);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TrialSinr)
    ->Arg(static_cast<int>(Scheme::Mrc))
    ->Arg(static_cast<int>(Scheme::Zf))
    ->Arg(static_cast<int>(Scheme::Mmse));

void BM_EstimateOutageBatch(benchmark::State& state) {
    const auto p = params(3, 2);
    const long trials = state.range(0);
    for (auto _ : state) {
        auto r = montecarlo::estimate_outage(p, Scheme::Mmse, trials, 29, 1);
        benchmark::DoNotOptimize(r.probability);
    }
    state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_EstimateOutageBatch)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
