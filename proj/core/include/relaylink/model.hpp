// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#ifndef RELAYLINK_MODEL_HPP
#define RELAYLINK_MODEL_HPP

#include <string>
#include <vector>

#include "relaylink/errors.hpp"

namespace relaylink {

// Receive combining / transmit beamforming scheme at the relay.
enum class Scheme { Mrc, Zf, Mmse };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

// 10^(x/10) and its inverse. All internal computation uses linear scale;
// decibels appear only at the interface.
double db_to_linear(double db);
double linear_to_db(double linear);

// One dual-hop relay configuration in linear scale, noise normalized to 1:
//  n        relay antennas (N >= 1)
//  m        co-channel interferers at the relay (M >= 0)
//  rho1     source transmit SNR, P_s/N0 > 0
//  rho2     relay transmit SNR, P_r/N0 > 0
//  gamma_th SINR outage threshold >= 0
//  rho_i    per-interferer INRs, size m, each > 0
struct SystemParams {
    int n = 1;
    int m = 0;
    double rho1 = 1.0;
    double rho2 = 1.0;
    double gamma_th = 1.0;
    std::vector<double> rho_i;
};

// Throws invalid_parameter_error when any field is out of domain.
void validate(const SystemParams& p);

// True when every interferer power equals the others to within rel_tol.
// Vacuously true for m <= 1.
bool is_equal_power(const SystemParams& p, double rel_tol = 1e-12);

// Interferer powers grouped into distinct values with multiplicities,
// together with the partial-fraction coefficients chi of
//   prod_k (1 + rho<k> s)^(-tau_k) = sum_i sum_j chi[i][j-1] (1 + rho<i> s)^(-j).
// powers are strictly decreasing; chi[i] has tau[i] entries (j = 1..tau_i);
// the chi sum over all (i,j) equals 1.
struct InterferenceProfile {
    std::vector<double> powers;            // distinct powers, descending
    std::vector<int> tau;                  // multiplicities, same length
    std::vector<std::vector<double>> chi;  // chi[i][j-1]
    int total = 0;                         // sum of tau == M
};

// Groups powers whose relative spread is within group_tol (grouped value =
// arithmetic mean) and computes chi. Primary route solves the defining
// identity as a linear system at M sample points and verifies it at held-out
// points; on verification failure falls back to the residue recurrence.
// Throws invalid_parameter_error for empty/non-positive input and
// numerical_error if neither route passes verification.
InterferenceProfile build_profile(const std::vector<double>& rho_i,
                                  double group_tol = 1e-9);

// Density of U1, the hyper-exponential-type interference functional:
//   f(x) = sum_ij chi_ij rho<i>^(-j) x^(j-1) e^(-x/rho<i>) / (j-1)!,  x >= 0.
double hyperexp_pdf(const InterferenceProfile& profile, double x);

// Moment generating identity value prod_k (1 + rho<k> s)^(-tau_k) evaluated
// from the grouped profile; used for self-checks and tests.
double profile_mgf(const InterferenceProfile& profile, double s);

// E{(1 + U1)^n} = sum_{k=0}^{n} C(n,k) E[U1^k] with
// E[U1^k] = sum_ij chi_ij * rho<i>^k * Gamma(j+k)/Gamma(j).
double expected_one_plus_u_pow(const InterferenceProfile& profile, int n);

namespace model_detail {

// Residue/log-derivative route for chi, exposed for targeted tests.
std::vector<std::vector<double>> chi_by_residues(
    const std::vector<double>& powers, const std::vector<int>& tau);

// Linear-system route for chi.
std::vector<std::vector<double>> chi_by_linear_solve(
    const std::vector<double>& powers, const std::vector<int>& tau);

// Max relative mismatch of the defining identity at a few held-out points.
double chi_identity_residual(const std::vector<double>& powers,
                             const std::vector<int>& tau,
                             const std::vector<std::vector<double>>& chi);

} // namespace model_detail

} // namespace relaylink

#endif // RELAYLINK_MODEL_HPP
