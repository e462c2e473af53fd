// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "relaylink/analytic.hpp"
#include "relaylink/montecarlo.hpp"
#include "relaylink/rng.hpp"
#include "support/oracles.hpp"

using namespace relaylink;
using montecarlo::ChannelDraw;
using testsupport::rel_err;

namespace {

SystemParams make(int n, int m, double rho1_db, double rho_int,
                  double gamma_th = 1.0) {
    SystemParams p;
    p.n = n;
    p.m = m;
    p.rho1 = db_to_linear(rho1_db);
    p.rho2 = p.rho1;
    p.gamma_th = gamma_th;
    p.rho_i.assign(static_cast<std::size_t>(m), rho_int);
    return p;
}

// literal first-hop ratio for an arbitrary combiner row w
double z_of(const ChannelDraw& d, const SystemParams& p,
            const std::vector<std::complex<double>>& w) {
    auto dot = [&](const std::complex<double>* col) {
        std::complex<double> s = 0;
        for (int k = 0; k < d.n; ++k) s += w[static_cast<std::size_t>(k)] * col[k];
        return s;
    };
    double den = 0;
    for (const auto& c : w) den += std::norm(c);
    for (int i = 0; i < d.m; ++i)
        den += p.rho_i[static_cast<std::size_t>(i)] *
               std::norm(dot(d.hi.data() + static_cast<std::size_t>(i) * d.n));
    return p.rho1 * std::norm(dot(d.h1.data())) / den;
}

}  // namespace

TEST_SUITE_BEGIN("montecarlo");

TEST_CASE("philox known-answer vectors") {
    // the two published 4x32-10 vectors: all-zero input, and pi-digit input
    const rng::Counter z = rng::philox4x32_10({0, 0, 0, 0}, {0, 0});
    CHECK(z[0] == 0x6627e8d5u);
    CHECK(z[1] == 0xe169c58du);
    CHECK(z[2] == 0xbc57ac4cu);
    CHECK(z[3] == 0x9b00dbd8u);
    const rng::Counter p = rng::philox4x32_10(
        {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
        {0xa4093822u, 0x299f31d0u});
    CHECK(p[0] == 0xd16cfe09u);
    CHECK(p[1] == 0x94fdccebu);
    CHECK(p[2] == 0x5001e420u);
    CHECK(p[3] == 0x24126ea1u);
}

TEST_CASE("trial stream counter layout is reproducible from the block cipher") {
    // reconstruct the first normal pair by hand from the documented layout:
    // counter = {trial_lo, trial_hi, block, attempt}, key = seed words
    const std::uint64_t seed = 0x0123456789abcdefULL;
    const std::uint64_t trial = 0x00000002deadbeefULL;
    const std::uint32_t attempt = 3;

    const rng::Counter out = rng::philox4x32_10(
        {static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
         0u, attempt},
        {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
    const std::uint64_t a = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
    const std::uint64_t b = (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
    const double u1 = (static_cast<double>(a >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double want0 = r * std::cos(2.0 * std::numbers::pi * u2);
    const double want1 = r * std::sin(2.0 * std::numbers::pi * u2);

    rng::TrialStream ts(seed, trial, attempt);
    auto [z0, z1] = ts.normal_pair();
    CHECK(z0 == want0);
    CHECK(z1 == want1);
    CHECK(ts.blocks_used() == 1);
}

TEST_CASE("trial stream separates trials, attempts and blocks") {
    rng::TrialStream a(7, 11), b(7, 11), c(7, 12), d(7, 11, 1);
    bool all_equal = true, trial_differs = false, attempt_differs = false;
    for (int i = 0; i < 8; ++i) {
        auto pa = a.normal_pair();
        auto pb = b.normal_pair();
        auto pc = c.normal_pair();
        auto pd = d.normal_pair();
        all_equal = all_equal && pa == pb;
        trial_differs = trial_differs || pa != pc;
        attempt_differs = attempt_differs || pa != pd;
    }
    CHECK(all_equal);
    CHECK(trial_differs);
    CHECK(attempt_differs);
    CHECK(a.blocks_used() == 8);
}

TEST_CASE("normal stream moments and distribution") {
    const std::size_t trials = 200000;
    std::vector<double> sample;
    sample.reserve(2 * trials);
    double sum = 0, sum2 = 0, sum4 = 0, cross = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        rng::TrialStream ts(905, t);
        auto [z0, z1] = ts.normal_pair();
        sample.push_back(z0);
        sample.push_back(z1);
        sum += z0 + z1;
        sum2 += z0 * z0 + z1 * z1;
        sum4 += z0 * z0 * z0 * z0 + z1 * z1 * z1 * z1;
        cross += z0 * z1;
    }
    const double n = static_cast<double>(2 * trials);
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sum2 / n - 1.0) < 0.02);
    CHECK(std::abs(sum4 / n - 3.0) < 0.1);
    CHECK(std::abs(cross / static_cast<double>(trials)) < 0.01);
    const double sup = testsupport::ecdf_sup_distance(
        std::move(sample),
        [](double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); });
    CHECK(sup < 0.005);
}

TEST_CASE("channel draw layout and bit-level order") {
    auto p = make(3, 2, 10, 1.0);
    const ChannelDraw d = montecarlo::draw_channel(p, 99, 1234);
    REQUIRE(d.n == 3);
    REQUIRE(d.m == 2);
    REQUIRE(d.h1.size() == 3);
    REQUIRE(d.h2.size() == 3);
    REQUIRE(d.hi.size() == 6);

    // the documented order: h1, then h2, then hi column-major, one pair per
    // entry, scaled to unit complex variance
    rng::TrialStream ts(99, 1234);
    const double s = 0.70710678118654752440;  // correctly rounded 1/sqrt(2)
    auto next = [&]() {
        auto [re, im] = ts.normal_pair();
        return std::complex<double>(re * s, im * s);
    };
    for (int k = 0; k < 3; ++k) CHECK(d.h1[static_cast<std::size_t>(k)] == next());
    for (int k = 0; k < 3; ++k) CHECK(d.h2[static_cast<std::size_t>(k)] == next());
    for (int k = 0; k < 6; ++k) CHECK(d.hi[static_cast<std::size_t>(k)] == next());

    // determinism and seed separation
    const ChannelDraw d2 = montecarlo::draw_channel(p, 99, 1234);
    CHECK(d.h1 == d2.h1);
    CHECK(d.hi == d2.hi);
    const ChannelDraw d3 = montecarlo::draw_channel(p, 100, 1234);
    CHECK(d.h1[0] != d3.h1[0]);
}

TEST_CASE("channel entries have unit complex variance") {
    auto p = make(4, 1, 10, 1.0);
    double sr = 0, si = 0, s2r = 0, s2i = 0, cross12 = 0;
    const std::size_t trials = 20000;
    for (std::size_t t = 0; t < trials; ++t) {
        const ChannelDraw d = montecarlo::draw_channel(p, 17, t);
        for (const auto& v : d.h1) {
            sr += v.real();
            si += v.imag();
            s2r += v.real() * v.real();
            s2i += v.imag() * v.imag();
        }
        cross12 += d.h1[0].real() * d.h2[0].real();
    }
    const double n = static_cast<double>(4 * trials);
    CHECK(std::abs(sr / n) < 0.01);
    CHECK(std::abs(si / n) < 0.01);
    CHECK(std::abs(s2r / n - 0.5) < 0.01);
    CHECK(std::abs(s2i / n - 0.5) < 0.01);
    CHECK(std::abs(cross12 / static_cast<double>(trials)) < 0.02);
}

TEST_CASE("combiner properties per draw") {
    auto p = make(4, 2, 10, 1.0);
    for (std::size_t t = 0; t < 200; ++t) {
        const ChannelDraw d = montecarlo::draw_channel(p, 5, t);

        const auto wm = montecarlo::combiner_mrc(d);
        double nm = 0;
        for (const auto& c : wm) nm += std::norm(c);
        CHECK(std::abs(nm - 1.0) < 1e-12);
        std::complex<double> wh1 = 0;
        double h1n = 0;
        for (int k = 0; k < d.n; ++k) {
            wh1 += wm[static_cast<std::size_t>(k)] * d.h1[static_cast<std::size_t>(k)];
            h1n += std::norm(d.h1[static_cast<std::size_t>(k)]);
        }
        CHECK(std::abs(wh1 - std::sqrt(h1n)) < 1e-12);

        const auto wz = montecarlo::combiner_zf(d);
        double nz = 0;
        for (const auto& c : wz) nz += std::norm(c);
        CHECK(std::abs(nz - 1.0) < 1e-12);
        for (int i = 0; i < d.m; ++i) {
            std::complex<double> leak = 0;
            for (int k = 0; k < d.n; ++k)
                leak += wz[static_cast<std::size_t>(k)] *
                        d.hi[static_cast<std::size_t>(i * d.n + k)];
            CHECK(std::abs(leak) < 1e-10);
        }

        // the mmse row maximizes the first-hop ratio over all rows
        const auto wmin = montecarlo::combiner_mmse(d, p);
        const double z_mmse = z_of(d, p, wmin);
        CHECK(z_mmse >= z_of(d, p, wm) - 1e-9 * z_mmse);
        CHECK(z_mmse >= z_of(d, p, wz) - 1e-9 * z_mmse);
    }
}

TEST_CASE("combiner error taxonomy") {
    auto p = make(2, 3, 10, 1.0);
    const ChannelDraw d = montecarlo::draw_channel(p, 1, 0);
    CHECK_THROWS_AS(montecarlo::combiner_zf(d), feasibility_error);
    auto pu = make(3, 2, 10, 1.0);
    pu.rho_i = {2.0, 1.0};
    const ChannelDraw du = montecarlo::draw_channel(pu, 1, 0);
    CHECK_THROWS_AS(montecarlo::combiner_mmse(du, pu), unsupported_profile_error);
}

TEST_CASE("zero-interferer zero-forcing reduces to mrc") {
    auto p = make(3, 0, 10, 0.0);
    for (std::size_t t = 0; t < 20; ++t) {
        const ChannelDraw d = montecarlo::draw_channel(p, 3, t);
        CHECK(montecarlo::combiner_zf(d) == montecarlo::combiner_mrc(d));
    }
}

TEST_CASE("reduced and literal sinr routes agree") {
    for (auto cfg : std::vector<std::pair<int, int>>{{4, 2}, {3, 1}, {2, 0}}) {
        auto p = make(cfg.first, cfg.second, 10, 1.0);
        for (std::size_t t = 0; t < 1000; ++t) {
            const ChannelDraw d = montecarlo::draw_channel(p, 31, t);
            for (auto s : {Scheme::Mrc, Scheme::Zf, Scheme::Mmse}) {
                const auto red = montecarlo::sinr_scheme(d, p, s);
                const auto lit = montecarlo::sinr_generic(d, p, s);
                CHECK_MESSAGE(rel_err(lit.gamma, red.gamma) < 1e-10, "n=",
                              cfg.first, " m=", cfg.second, " scheme=",
                              to_string(s), " t=", t);
                CHECK(rel_err(lit.z, red.z) < 1e-10);
            }
        }
    }
}

TEST_CASE("first-hop statistic routes agree") {
    auto p = make(3, 2, 10, 2.0);
    for (std::size_t t = 0; t < 200; ++t) {
        const ChannelDraw d = montecarlo::draw_channel(p, 77, t);
        const double z = montecarlo::z_statistic(d, p);
        CHECK(rel_err(z, montecarlo::sinr_scheme(d, p, Scheme::Mmse).z) < 1e-12);
    }
    auto p0 = make(3, 0, 10, 0.0);
    const ChannelDraw d0 = montecarlo::draw_channel(p0, 77, 0);
    CHECK_THROWS_AS(montecarlo::z_statistic(d0, p0), invalid_parameter_error);
}

TEST_CASE("per-scheme first-hop statistics match their laws") {
    // ||h1||^2 ~ Gamma(n, 1); the zero-forcing statistic / rho1 ~ Gamma(n-m, 1)
    auto p = make(3, 2, 10, 1.0);
    const std::size_t trials = 20000;
    std::vector<double> h1n, y3;
    h1n.reserve(trials);
    y3.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const ChannelDraw d = montecarlo::draw_channel(p, 911, t);
        double acc = 0;
        for (const auto& v : d.h1) acc += std::norm(v);
        h1n.push_back(acc);
        y3.push_back(montecarlo::sinr_scheme(d, p, Scheme::Zf).z / p.rho1);
    }
    const double eps = testsupport::dkw_epsilon(trials, 0.01);
    CHECK(testsupport::ecdf_sup_distance(
              std::move(h1n),
              [](double x) { return testsupport::gamma_p_oracle(3, x); }) <
          eps + 0.002);
    CHECK(testsupport::ecdf_sup_distance(
              std::move(y3),
              [](double x) { return testsupport::gamma_p_oracle(1, x); }) <
          eps + 0.002);
}

TEST_CASE("outage estimate is worker-count independent and deterministic") {
    auto p = make(3, 2, 10, 1.0);
    const auto r1 = montecarlo::estimate_outage(p, Scheme::Mrc, 20000, 42, 1);
    const auto r2 = montecarlo::estimate_outage(p, Scheme::Mrc, 20000, 42, 2);
    const auto r5 = montecarlo::estimate_outage(p, Scheme::Mrc, 20000, 42, 5);
    CHECK(r1.probability == r2.probability);
    CHECK(r1.probability == r5.probability);
    CHECK(r1.outage_count == r5.outage_count);
    const auto again = montecarlo::estimate_outage(p, Scheme::Mrc, 20000, 42, 3);
    CHECK(again.outage_count == r1.outage_count);
    CHECK(r1.trials == 20000);
    CHECK(r1.std_err ==
          doctest::Approx(std::sqrt(r1.probability * (1.0 - r1.probability) /
                                    20000.0))
              .epsilon(1e-12));
    CHECK(r1.degenerate_redraws == 0);
}

TEST_CASE("outage estimate input validation") {
    auto p = make(3, 2, 10, 1.0);
    CHECK_THROWS_AS(montecarlo::estimate_outage(p, Scheme::Mrc, 999, 1),
                    invalid_parameter_error);
    auto bad = make(2, 3, 10, 1.0);
    CHECK_THROWS_AS(montecarlo::estimate_outage(bad, Scheme::Zf, 2000, 1),
                    feasibility_error);
}

TEST_CASE("outage estimate edge behavior") {
    auto p0 = make(3, 2, 10, 1.0, 0.0);  // zero threshold: outage impossible
    const auto r = montecarlo::estimate_outage(p0, Scheme::Mrc, 2000, 1);
    CHECK(r.probability == 0.0);
    CHECK_FALSE(r.reliable);

    auto deep = make(3, 1, 30, 1.0);  // far tail: too few hits to trust
    const auto rd = montecarlo::estimate_outage(deep, Scheme::Zf, 2000, 1);
    CHECK_FALSE(rd.reliable);
}

TEST_CASE("estimates agree with the closed forms at moderate scale") {
    auto p = make(3, 2, 10, 1.0);
    auto prof = build_profile(p.rho_i);
    const long trials = 100000;
    struct Row {
        Scheme s;
        double exact;
    };
    const Row rows[] = {
        {Scheme::Mrc, analytic::outage_mrc_exact(p, prof).probability},
        {Scheme::Zf, analytic::outage_zf_exact(p)},
        {Scheme::Mmse, analytic::outage_mmse_exact(p).probability},
    };
    for (const Row& row : rows) {
        const auto est = montecarlo::estimate_outage(p, row.s, trials, 1301);
        CHECK_MESSAGE(std::abs(est.probability - row.exact) <
                          4.0 * est.std_err + 1e-4,
                      to_string(row.s), ": est=", est.probability,
                      " exact=", row.exact);
        CHECK(est.reliable);
    }
}

TEST_SUITE_END();
