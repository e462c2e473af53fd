// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#ifndef RELAYLINK_SPECFUN_HPP
#define RELAYLINK_SPECFUN_HPP

#include <functional>

#include "relaylink/errors.hpp"

namespace relaylink::specfun {

// Gamma(n) = (n-1)! for integer n in [1, 170]. Throws invalid_parameter_error
// for n < 1 and a range-style invalid_parameter_error for n > 170, where the
// result would overflow double.
double gamma_int(int n);

// Upper incomplete gamma Gamma(n, x) = (n-1)! e^(-x) sum_{k<n} x^k/k! for
// integer n >= 1, x >= 0. Flushes to 0 when e^(-x) underflows.
double upper_inc_gamma_int(int n, double x);

// Modified Bessel function of the second kind, integer order.
// K_{-v} = K_v. Relative accuracy <= 1e-12 for x in [1e-8, 700] and
// |v| <= 10 (holds well beyond). x <= 0 throws std::domain_error; results
// below the smallest normal flush to +0.
double bessel_k_int(int v, double x);

// Scaled product sbk(v, B) = B^(v/2) K_v(2 sqrt(B)) for B > 0.
// Finite and stable where the two factors would individually overflow or
// underflow: for v >= 1, sbk(v, B) -> Gamma(v)/2 as B -> 0+.
// Computed by the recurrence g_{v+1} = v g_v + B g_{v-1} on
// g_v = B^(v/2) K_v(2 sqrt(B)), with sbk(-|v|, B) = B^v g_{|v|}.
double scaled_bessel_k(int v, double b);

// Fills out[k] = sbk(vmin + k, B) for k = 0 .. vmax - vmin using one
// recurrence pass. Requires vmin <= vmax, B > 0.
void scaled_bessel_k_row(int vmin, int vmax, double b, double* out);

// 2F1(a, b; b+1; -z) for integer a, b >= 1 and z >= 0. Relative accuracy
// <= 1e-10 on the supported domain. Series route (Pfaff transformed,
// all-positive terms) for small z, exact finite antiderivative form for
// large z.
double gauss_2f1_family(int a, int b, double z);

// Outcome of an adaptive quadrature call.
struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;  // certified bound, not an estimate of luck
    long evaluations = 0;
    bool converged = false;
};

// Integrates f over (0, inf) by the substitution x = t/(1-t) followed by
// adaptive bisection of (0,1) with an embedded Gauss(7)/Kronrod(15) pair.
// Returns only when the accumulated error bound is <= abs_tol; otherwise
// throws quadrature_error carrying the best estimate, its error bound and
// the evaluation count. budget caps integrand evaluations.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double abs_tol = 1e-6,
                                         long budget = 200000);

} // namespace relaylink::specfun

#endif // RELAYLINK_SPECFUN_HPP
