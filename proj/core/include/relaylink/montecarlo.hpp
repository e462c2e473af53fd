// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors
//
// Monte Carlo estimation of the dual-hop outage probability, plus the
// per-draw SINR routes used to cross-validate the closed forms. Two
// independent SINR computations exist on purpose: sinr_generic evaluates the
// end-to-end relay expression literally (explicit precoder matrix, explicit
// gain normalization), sinr_scheme evaluates the reduced per-scheme form.
// Tests assert they agree to 1e-10; do not merge them.

#ifndef RELAYLINK_MONTECARLO_HPP
#define RELAYLINK_MONTECARLO_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "relaylink/model.hpp"

namespace relaylink::montecarlo {

// One fading realization. All entries are CN(0,1): real and imaginary parts
// are independent normals with variance 1/2. Interferer powers enter the
// SINR formulas, never the draws.
struct ChannelDraw {
    int n = 0;
    int m = 0;
    std::vector<std::complex<double>> h1;  // source -> relay, length n
    std::vector<std::complex<double>> h2;  // relay -> destination, length n
    std::vector<std::complex<double>> hi;  // interferers -> relay, n x m
                                           // column-major
};

// Deterministic draw: fills h1, then h2, then hi column by column, one
// normal pair per complex entry.
ChannelDraw draw_channel(const SystemParams& p, std::uint64_t seed,
                         std::uint64_t trial, std::uint32_t attempt = 0);

// Receive combiners as row vectors w with unit norm, so w * h contracts
// directly. combiner_zf requires n > m; combiner_mmse requires equal
// interferer powers (its literal closed form has a single 1/rho_I term).
// All three throw degenerate_draw_error on measure-zero degenerate input.
std::vector<std::complex<double>> combiner_mrc(const ChannelDraw& d);
std::vector<std::complex<double>> combiner_zf(const ChannelDraw& d);
std::vector<std::complex<double>> combiner_mmse(const ChannelDraw& d,
                                                const SystemParams& p);

struct SinrSample {
    double gamma;  // end-to-end SINR
    double z;      // first-hop SINR statistic Z(w)
};

// Reduced per-scheme SINR forms (closed-form Z, shared dual-hop map).
SinrSample sinr_scheme(const ChannelDraw& d, const SystemParams& p, Scheme s);

// Literal end-to-end evaluation: builds the rank-one relay precoder
// W = omega (h2^H / ||h2||) w, with the scheme's gain normalization omega,
// and evaluates the full SINR ratio including forwarded relay noise.
SinrSample sinr_generic(const ChannelDraw& d, const SystemParams& p, Scheme s);

// First-hop MMSE statistic Z computed two ways (combiner route and
// quadratic-form route); throws numerical_error if they disagree beyond
// 1e-10 relative. Equal interferer powers required.
double z_statistic(const ChannelDraw& d, const SystemParams& p);

struct EstimateResult {
    double probability = 0.0;
    double std_err = 0.0;
    long trials = 0;
    long outage_count = 0;
    long degenerate_redraws = 0;
    bool reliable = false;  // false when outage_count < 10
};

// Estimates P[gamma < gamma_th] over `trials` independent draws.
// workers <= 0 selects hardware concurrency; the result is identical for
// every worker count because each trial depends only on (seed, trial).
EstimateResult estimate_outage(const SystemParams& p, Scheme s, long trials,
                               std::uint64_t seed, int workers = 0);

}  // namespace relaylink::montecarlo

#endif  // RELAYLINK_MONTECARLO_HPP
