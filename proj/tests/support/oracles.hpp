// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors
//
// Test-side oracles. Everything here is computed by a route that shares no
// code with the library under test: Boost double-exponential quadrature over
// defining integral representations, explicit small-case algebra, and plain
// order statistics. Oracles are evaluated first and the library is compared
// against them, never the other way around.

#ifndef RELAYLINK_TESTS_ORACLES_HPP
#define RELAYLINK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace testsupport {

using LD = long double;

inline constexpr LD kLn2 = 0.69314718055994530941723212145818L;

// K_v(x) from its cosh integral, K_v(x) = int_0^inf e^(-x cosh t) cosh(vt) dt.
// The integrand is assembled in log space: at large t the e^(-x cosh t)
// factor underflows while cosh(vt) overflows, and the naive product is NaN.
inline LD bessel_k_integral_oracle(int v, LD x) {
    if (x <= 0) throw std::domain_error("bessel_k_integral_oracle: x <= 0");
    const int av = v < 0 ? -v : v;
    boost::math::quadrature::exp_sinh<LD> integrator;
    auto f = [&](LD t) -> LD {
        const LD y = static_cast<LD>(av) * t;
        // log cosh(y) = y + log1p(e^(-2y)) - log 2, exact for all y >= 0
        const LD log_cosh = y + std::log1p(std::exp(-2.0L * y)) - kLn2;
        const LD expo = -x * std::cosh(t) + log_cosh;
        return expo < -11500.0L ? 0.0L : std::exp(expo);
    };
    LD err = 0;
    LD val = integrator.integrate(f, std::sqrt(std::numeric_limits<LD>::epsilon()), &err);
    return val;
}

// 2F1(a, b; b+1; -z) from the Euler integral
//   2F1(a, b; b+1; -z) = b int_0^1 t^(b-1) (1 + z t)^(-a) dt,  b >= 1.
inline LD hyp2f1_euler_oracle(LD a, int b, LD z) {
    if (b < 1) throw std::domain_error("hyp2f1_euler_oracle: b < 1");
    boost::math::quadrature::tanh_sinh<LD> integrator;
    auto f = [&](LD t) -> LD {
        return std::pow(t, static_cast<LD>(b - 1)) * std::pow(1.0L + z * t, -a);
    };
    return static_cast<LD>(b) * integrator.integrate(f, 0.0L, 1.0L);
}

// Outage of the two-branch relay ratio gamma = Z r / (r + 1 + Z) with
// independent Z = rho1 * G1, G1 ~ Gamma(a1, 1) and r = rho2 * G2,
// G2 ~ Gamma(a2, 1):
//   P[gamma < t] = P[Z <= t] + int_{z > t} f_Z(z) P[G2 < h(z)] dz,
//   h(z) = t (1 + z) / (rho2 (z - t)).
// Direct probability calculus over the gamma densities; no library code.
inline double dualhop_outage_oracle(int a1, int a2, double rho1, double rho2,
                                    double gamma_th) {
    if (gamma_th <= 0) return 0.0;
    using boost::math::gamma_p;
    const LD t = gamma_th;
    const LD r1 = rho1;
    const LD r2 = rho2;
    const LD lg = std::lgamma(static_cast<LD>(a1));
    boost::math::quadrature::exp_sinh<LD> integrator;
    auto f = [&](LD s) -> LD {  // z = t + s, s > 0
        const LD z = t + s;
        const LD y = z / r1;
        const LD logpdf =
            (static_cast<LD>(a1) - 1.0L) * std::log(y) - y - lg - std::log(r1);
        if (logpdf < -11500.0L) return 0.0L;
        const LD h = t * (1.0L + z) / (r2 * (z - t));
        return std::exp(logpdf) * gamma_p(static_cast<LD>(a2), h);
    };
    LD err = 0;
    const LD tail =
        integrator.integrate(f, std::sqrt(std::numeric_limits<LD>::epsilon()), &err);
    const LD head = gamma_p(static_cast<LD>(a1), t / r1);
    return static_cast<double>(head + tail);
}

// MRC/MRT outage with m equal-power interferers: conditioned on the
// interference functional U ~ Gamma(m, rho_int), the first-hop statistic is
// (rho1 / (1 + u)) * Gamma(n, 1), so the conditional outage is the dual-hop
// oracle with a rescaled first-hop SNR. One more exp_sinh layer marginalizes
// over u.
inline double mrc_outage_oracle(int n, int m, double rho1, double rho2,
                                double rho_int, double gamma_th) {
    if (m == 0) return dualhop_outage_oracle(n, n, rho1, rho2, gamma_th);
    const LD ri = rho_int;
    const LD lg = std::lgamma(static_cast<LD>(m));
    boost::math::quadrature::exp_sinh<LD> integrator;
    auto f = [&](LD u) -> LD {
        const LD y = u / ri;
        const LD logpdf =
            (static_cast<LD>(m) - 1.0L) * std::log(y) - y - lg - std::log(ri);
        if (logpdf < -11500.0L) return 0.0L;
        const double cond = dualhop_outage_oracle(
            n, n, rho1 / (1.0 + static_cast<double>(u)), rho2, gamma_th);
        return std::exp(logpdf) * static_cast<LD>(cond);
    };
    LD err = 0;
    // relax the inner-outer tolerance product a little; 1e-9 outer is plenty
    LD val = integrator.integrate(f, 1e-9L, &err);
    return static_cast<double>(val);
}

// F_Z(t) for the MRC first-hop statistic Z = rho1 ||h1||^2 / (1 + U):
//   F_Z(t) = int_0^inf f_U(u) P[ Gamma(n,1) < (t/rho1)(1+u) ] du
// with f_U the density of U = sum_i rho_i E_i, E_i iid Exp(1). Supports all
// powers equal (U ~ Gamma(m, rho)) or all distinct (explicit two-sided
// partial fractions chi_i = prod_{j != i} rho_i / (rho_i - rho_j)).
inline double mrc_first_hop_cdf_oracle(int n, const std::vector<double>& rho_is,
                                       double rho1, double t) {
    using boost::math::gamma_p;
    const std::size_t m = rho_is.size();
    if (m == 0) return static_cast<double>(gamma_p(static_cast<LD>(n),
                                                   static_cast<LD>(t / rho1)));
    auto inner = [&](LD u) -> LD {
        return gamma_p(static_cast<LD>(n),
                       (static_cast<LD>(t) / static_cast<LD>(rho1)) * (1.0L + u));
    };
    bool all_equal = true;
    for (double r : rho_is) all_equal = all_equal && r == rho_is[0];
    boost::math::quadrature::exp_sinh<LD> integrator;
    LD err = 0;
    if (all_equal || m == 1) {
        const LD ri = rho_is[0];
        const LD lg = std::lgamma(static_cast<LD>(m));
        auto f = [&](LD u) -> LD {
            const LD y = u / ri;
            const LD logpdf = (static_cast<LD>(m) - 1.0L) * std::log(y) - y - lg -
                              std::log(ri);
            if (logpdf < -11500.0L) return 0.0L;
            return std::exp(logpdf) * inner(u);
        };
        return static_cast<double>(integrator.integrate(f, 1e-10L, &err));
    }
    // distinct powers: f_U(u) = sum_i (chi_i / rho_i) e^(-u / rho_i)
    std::vector<LD> chi(m, 1.0L);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (j != i)
                chi[i] *= static_cast<LD>(rho_is[i]) /
                          (static_cast<LD>(rho_is[i]) - static_cast<LD>(rho_is[j]));
    auto f = [&](LD u) -> LD {
        LD pdf = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const LD ri = rho_is[i];
            pdf += chi[i] / ri * std::exp(-u / ri);
        }
        return pdf * inner(u);
    };
    return static_cast<double>(integrator.integrate(f, 1e-10L, &err));
}

// Regularized upper gamma Q(n, x) by Boost, exposed with the test's
// preferred signature.
inline double gamma_q_oracle(int n, double x) {
    if (x <= 0) return 1.0;
    return static_cast<double>(
        boost::math::gamma_q(static_cast<LD>(n), static_cast<LD>(x)));
}

inline double gamma_p_oracle(double a, double x) {
    if (x <= 0) return 0.0;
    return static_cast<double>(
        boost::math::gamma_p(static_cast<LD>(a), static_cast<LD>(x)));
}

// Least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("ls_slope: need >= 2 paired points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

// sup_x |F_hat(x) - F(x)| over the sample points (both one-sided gaps at
// each jump). Sorts a copy of the sample.
inline double ecdf_sup_distance(std::vector<double> sample,
                                const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double sup = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double F = cdf(sample[i]);
        sup = std::max(sup, std::max(F - static_cast<double>(i) / n,
                                     static_cast<double>(i + 1) / n - F));
    }
    return sup;
}

// Dvoretzky-Kiefer-Wolfowitz band half-width at confidence 1 - alpha.
inline double dkw_epsilon(std::size_t n, double alpha) {
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

inline double rel_err(double got, double want) {
    if (want == 0.0) return std::abs(got);
    return std::abs(got - want) / std::abs(want);
}

}  // namespace testsupport

#endif  // RELAYLINK_TESTS_ORACLES_HPP
