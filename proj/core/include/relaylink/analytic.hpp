// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors
//
// Closed-form and quadrature-backed outage probabilities for the dual-hop
// amplify-and-forward relay with N receive antennas, maximum-ratio transmit
// beamforming on the second hop, and M co-channel interferers on the first
// hop. Schemes differ in the first-hop combiner: MRC, zero-forcing, MMSE.

#ifndef RELAYLINK_ANALYTIC_HPP
#define RELAYLINK_ANALYTIC_HPP

#include <optional>
#include <string>

#include "relaylink/model.hpp"
#include "relaylink/specfun.hpp"

namespace relaylink::analytic {

enum class Method { Exact, LowerBound, HighSnr, LargeN };

std::string to_string(Method m);
Method method_from_string(const std::string& name);

// An outage probability in [0, 1], plus aggregate quadrature accounting for
// the paths that integrate (exact MRC and exact MMSE). For those paths
// quadrature->abs_error_estimate bounds the total integration error folded
// into probability units.
struct OutageValue {
    double probability = 0.0;
    std::optional<specfun::QuadratureResult> quadrature;
};

// Exact outage of the MRC/MRT scheme. The profile must be built from
// p.rho_i (ignored when p.m == 0). tol bounds the total certified
// quadrature error contributed to the probability.
OutageValue outage_mrc_exact(const SystemParams& p,
                             const InterferenceProfile& profile,
                             double tol = 1e-6);

// Closed-form lower bound for MRC/MRT (exact in the second-hop-limited
// regime; tight from moderate SNR).
double outage_mrc_lower(const SystemParams& p,
                        const InterferenceProfile& profile);

// High-SNR approximation for MRC/MRT: slope N, interference enters through
// E{(1+U1)^N}. May exceed 1 at low SNR; clamped without error.
double outage_mrc_highsnr(const SystemParams& p,
                          const InterferenceProfile& profile);

// Exact outage of the ZF/MRT scheme, closed form. Requires n > m
// (feasibility_error otherwise). Interference powers do not appear.
double outage_zf_exact(const SystemParams& p);

// High-SNR approximation for ZF/MRT: slope n - m, independent of rho2/rho1.
double outage_zf_highsnr(const SystemParams& p);

// Exact outage of the MMSE/MRT scheme. Closed part plus quadrature part;
// requires equal interferer powers (unsupported_profile_error otherwise).
OutageValue outage_mmse_exact(const SystemParams& p, double tol = 1e-6);

// Closed-form lower bound for MMSE/MRT (equal powers required).
double outage_mmse_lower(const SystemParams& p);

// High-SNR approximation for MMSE/MRT: slope n (equal powers required).
double outage_mmse_highsnr(const SystemParams& p);

// Interference-free dual-hop outage: the exact outage of every scheme when
// m = 0, and the large-N limit of ZF and MMSE under fixed interference.
double outage_largen(const SystemParams& p);

// c.d.f. of the first-hop MMSE SINR numerator statistic Z at z >= 0,
// hypergeometric single-sum form. Equal interferer powers required.
double cdf_z_unified(const SystemParams& p, double z);

// Same c.d.f. in the piecewise-polynomial form; used as the cross-check
// route. Equal interferer powers required.
double cdf_z_piecewise(const SystemParams& p, double z);

// Coefficient A in P ~ A * (gamma_th/rho1)^d at high SNR, where d is the
// scheme's diversity order (N for MRC and MMSE, N-M for ZF).
double highsnr_coefficient(Scheme s, const SystemParams& p,
                           const InterferenceProfile& profile);

// Dispatch helper: builds the profile from p.rho_i where needed and routes
// to the functions above. LowerBound is undefined for ZF and throws
// invalid_parameter_error.
OutageValue evaluate_outage(Scheme s, Method method, const SystemParams& p,
                            double tol = 1e-6);

}  // namespace relaylink::analytic

#endif  // RELAYLINK_ANALYTIC_HPP
