// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#include "relaylink/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "specfun_impl.hpp"

namespace relaylink::analytic {

namespace {

using LD = long double;
using specfun::detail::NeumaierSum;

LD powi_ld(LD base, int e) {
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-(long)e)
                          : static_cast<unsigned long>(e);
    LD r = 1, p = base;
    while (n) {
        if (n & 1UL) r *= p;
        p *= p;
        n >>= 1UL;
    }
    return inv ? 1.0L / r : r;
}

// Threshold ratios shared by every outage expression:
//   b = gamma_th/rho1, c = gamma_th/rho2, d = 1/rho2, bp = b (c + d).
struct Kernel {
    LD b, c, d, bp;
};

Kernel make_kernel(const SystemParams& p) {
    Kernel k;
    k.b = (LD)p.gamma_th / (LD)p.rho1;
    k.c = (LD)p.gamma_th / (LD)p.rho2;
    k.d = 1.0L / (LD)p.rho2;
    k.bp = k.b * (k.c + k.d);
    return k;
}

double finalize_exact(LD raw, const char* what) {
    if (!(raw > -1e-5L) || !(raw < 1.0L + 1e-5L))
        throw numerical_error(std::string(what) +
                              ": pre-clamp probability " +
                              std::to_string((double)raw) +
                              " leaves [0,1] by more than 1e-5");
    return std::clamp(static_cast<double>(raw), 0.0, 1.0);
}

double finalize_approx(LD raw) {
    // approximations legitimately exceed 1 at low SNR; clamp silently
    return std::clamp(static_cast<double>(raw), 0.0, 1.0);
}

// Interference-free dual-hop kernel sum. With y ~ Gamma(a1, 1) on the first
// hop and t ~ Gamma(a2, 1) on the second,
//   P[ y (t - c) rho-normalized <= gamma_th ] = 1 - 2 e^{-b-c} S / Gamma(a2),
//   S = sum_{m<a1} (b^m/m!) sum_{j<=m} C(m,j) d^{m-j}
//         sum_{k<=a2+j-1} C(a2+j-1,k) c^{a2+j-1-k} sbk(k-m+1, bp).
LD dual_hop_sum(int a1, int a2, const Kernel& K) {
    const int vmin = 2 - a1;
    const int vmax = a2;
    std::vector<LD> sbk(static_cast<std::size_t>(vmax - vmin + 1));
    specfun::detail::scaled_bessel_k_row_t<LD>(vmin, vmax, K.bp, sbk.data());

    NeumaierSum<LD> S;
    LD bm = 1;  // b^m / m!
    for (int m = 0; m < a1; ++m) {
        if (m > 0) bm *= K.b / m;
        LD cmj = 1;  // C(m, j)
        for (int j = 0; j <= m; ++j) {
            if (j > 0) cmj = cmj * (m - j + 1) / j;
            const LD dp = powi_ld(K.d, m - j);
            const int top = a2 + j - 1;
            LD ck = 1;  // C(top, k)
            for (int k = 0; k <= top; ++k) {
                if (k > 0) ck = ck * (top - k + 1) / k;
                const LD cpow = powi_ld(K.c, top - k);
                S.add(bm * cmj * dp * ck * cpow *
                      sbk[static_cast<std::size_t>(k - m + 1 - vmin)]);
            }
        }
    }
    return S.value();
}

LD dual_hop_raw(int a1, int a2, const Kernel& K) {
    const LD f = 2 * std::exp(-K.b - K.c) /
                 specfun::detail::gamma_int_t<LD>(a2);
    return 1.0L - f * dual_hop_sum(a1, a2, K);
}

void check_gamma_cap(int n, const char* what) {
    if (n > 170)
        throw invalid_parameter_error(std::string(what) +
                                      ": n exceeds the factorial range of "
                                      "double (170)");
}

void check_profile(const SystemParams& p, const InterferenceProfile& prof,
                   const char* what) {
    if (prof.total != p.m)
        throw invalid_parameter_error(
            std::string(what) + ": profile covers " +
            std::to_string(prof.total) + " interferers but m = " +
            std::to_string(p.m));
}

double mean_rho_i(const SystemParams& p) {
    LD s = 0;
    for (double r : p.rho_i) s += (LD)r;
    return static_cast<double>(s / (LD)p.m);
}

void require_equal_power(const SystemParams& p, const char* what) {
    if (!is_equal_power(p))
        throw unsupported_profile_error(
            std::string(what) +
            ": closed form requires equal interferer powers");
}

// Runs one certified integral for an exact-path term and folds it into the
// running total; throws quadrature_error enriched with term context.
template <class F>
void add_term_integral(F&& f, LD coeff, double tol, long n_calls,
                       const std::string& context, NeumaierSum<LD>& acc,
                       specfun::QuadratureResult& agg) {
    if (coeff == 0) return;
    // The term enters the total as coeff * I, so the absolute tolerance on
    // I scales inversely with |coeff|; a small coefficient legitimately
    // relaxes the demand on a correspondingly large integral.
    const LD tol_loc = (LD)tol / ((LD)n_calls * std::abs(coeff));
    auto r = specfun::detail::integrate_semi_infinite_t<LD>(
        std::forward<F>(f), tol_loc, 200000);
    if (r.bad_value)
        throw numerical_error(context +
                              ": integrand produced non-finite values");
    if (!r.converged) {
        char tol_text[32];
        std::snprintf(tol_text, sizeof tol_text, "%.3g",
                      static_cast<double>(tol_loc));
        throw quadrature_error(
            context + ": quadrature budget exhausted before certifying " +
                tol_text,
            static_cast<double>(coeff * r.value),
            static_cast<double>(std::abs(coeff) * r.abs_error),
            r.evaluations);
    }
    acc.add(coeff * r.value);
    agg.value += static_cast<double>(coeff * r.value);
    agg.abs_error_estimate +=
        static_cast<double>(std::abs(coeff) * r.abs_error);
    agg.evaluations += r.evaluations;
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::LowerBound: return "lower";
        case Method::HighSnr: return "highsnr";
        case Method::LargeN: return "largen";
    }
    throw invalid_parameter_error("to_string: bad Method value");
}

Method method_from_string(const std::string& name) {
    if (name == "exact") return Method::Exact;
    if (name == "lower") return Method::LowerBound;
    if (name == "highsnr") return Method::HighSnr;
    if (name == "largen") return Method::LargeN;
    throw invalid_parameter_error(
        "method_from_string: unknown method '" + name +
        "' (expected exact, lower, highsnr or largen)");
}

OutageValue outage_mrc_exact(const SystemParams& p,
                             const InterferenceProfile& profile, double tol) {
    validate(p);
    check_gamma_cap(p.n + p.n, "outage_mrc_exact");
    if (!(tol > 0))
        throw invalid_parameter_error("outage_mrc_exact: tol must be > 0");
    if (p.gamma_th == 0) return {0.0, std::nullopt};
    const Kernel K = make_kernel(p);
    if (p.m == 0)
        return {finalize_exact(dual_hop_raw(p.n, p.n, K), "outage_mrc_exact"),
                std::nullopt};
    check_profile(p, profile, "outage_mrc_exact");

    const int n = p.n;
    // number of certified integrals, for the per-call tolerance budget
    long n_calls = 0;
    {
        long n_mjk = 0;
        for (int m = 0; m < n; ++m)
            for (int j = 0; j <= m; ++j) n_mjk += n + j;
        long n_pq = 0;
        for (int t : profile.tau) n_pq += t;
        n_calls = n_mjk * n_pq;
    }

    const LD F = 2 * std::exp(-K.b - K.c) / specfun::detail::gamma_int_t<LD>(n);
    NeumaierSum<LD> total;
    specfun::QuadratureResult agg{0.0, 0.0, 0, true};

    LD bm = 1;
    for (int m = 0; m < n; ++m) {
        if (m > 0) bm *= K.b / m;
        LD cmj = 1;
        for (int j = 0; j <= m; ++j) {
            if (j > 0) cmj = cmj * (m - j + 1) / j;
            const LD dp = powi_ld(K.d, m - j);
            const int top = n + j - 1;
            LD ck = 1;
            for (int k = 0; k <= top; ++k) {
                if (k > 0) ck = ck * (top - k + 1) / k;
                const LD cmjk = F * bm * cmj * dp * ck * powi_ld(K.c, top - k);
                const int nu = k - m + 1;
                for (std::size_t pi = 0; pi < profile.powers.size(); ++pi) {
                    const LD rho_p = (LD)profile.powers[pi];
                    const LD lambda = K.b + 1.0L / rho_p;
                    LD rq = 1;    // rho_p^{-q}
                    LD qfac = 1;  // (q-1)!
                    for (int q = 1; q <= profile.tau[pi]; ++q) {
                        rq /= rho_p;
                        if (q > 1) qfac *= (q - 1);
                        const LD coeff =
                            cmjk * (LD)profile.chi[pi][q - 1] * rq / qfac;
                        if (coeff == 0) continue;
                        auto f = [&K, m, nu, q, lambda](LD x) -> LD {
                            const LD e = std::exp(-lambda * x);
                            if (e == 0) return 0;
                            const LD sb = specfun::detail::scaled_bessel_k_t<LD>(
                                nu, K.bp * (x + 1));
                            return sb * powi_ld(x + 1, m) *
                                   powi_ld(x, q - 1) * e;
                        };
                        add_term_integral(
                            f, coeff, tol, n_calls,
                            "outage_mrc_exact term (p=" + std::to_string(pi) +
                                ", q=" + std::to_string(q) +
                                ", m=" + std::to_string(m) +
                                ", j=" + std::to_string(j) +
                                ", k=" + std::to_string(k) + ")",
                            total, agg);
                    }
                }
            }
        }
    }
    const LD raw = 1.0L - total.value();
    return {finalize_exact(raw, "outage_mrc_exact"), agg};
}

double outage_mrc_lower(const SystemParams& p,
                        const InterferenceProfile& profile) {
    validate(p);
    check_gamma_cap(p.n, "outage_mrc_lower");
    if (p.gamma_th == 0) return 0.0;
    const Kernel K = make_kernel(p);
    const LD gn = specfun::detail::gamma_int_t<LD>(p.n);
    const LD hop2 = specfun::detail::upper_inc_gamma_int_t<LD>(p.n, K.c) / gn;
    if (p.m == 0) {
        const LD hop1 =
            specfun::detail::upper_inc_gamma_int_t<LD>(p.n, K.b) / gn;
        return finalize_exact(1.0L - hop2 * hop1, "outage_mrc_lower");
    }
    check_profile(p, profile, "outage_mrc_lower");

    NeumaierSum<LD> S;
    LD bk = 1;  // b^k / k!
    for (int k = 0; k < p.n; ++k) {
        if (k > 0) bk *= K.b / k;
        LD ckl = 1;  // C(k, l)
        for (int l = 0; l <= k; ++l) {
            if (l > 0) ckl = ckl * (k - l + 1) / l;
            for (std::size_t i = 0; i < profile.powers.size(); ++i) {
                const LD rho = (LD)profile.powers[i];
                const LD shrink = 1.0L / (1.0L + rho * K.b);
                for (int j = 1; j <= profile.tau[i]; ++j) {
                    LD grat = 1;  // Gamma(j+l)/Gamma(j)
                    for (int t = 0; t < l; ++t) grat *= (j + t);
                    S.add(bk * ckl * (LD)profile.chi[i][j - 1] * grat *
                          powi_ld(rho, l) * powi_ld(shrink, j + l));
                }
            }
        }
    }
    const LD raw = 1.0L - hop2 * std::exp(-K.b) * S.value();
    return finalize_exact(raw, "outage_mrc_lower");
}

double outage_mrc_highsnr(const SystemParams& p,
                          const InterferenceProfile& profile) {
    validate(p);
    check_gamma_cap(p.n + 1, "outage_mrc_highsnr");
    if (p.gamma_th == 0) return 0.0;
    LD e1u = 1;
    if (p.m > 0) {
        check_profile(p, profile, "outage_mrc_highsnr");
        e1u = (LD)expected_one_plus_u_pow(profile, p.n);
    }
    const LD mu = (LD)p.rho2 / (LD)p.rho1;
    const LD b = (LD)p.gamma_th / (LD)p.rho1;
    const LD raw = (powi_ld(1.0L / mu, p.n) + e1u) * powi_ld(b, p.n) /
                   specfun::detail::gamma_int_t<LD>(p.n + 1);
    return finalize_approx(raw);
}

double outage_zf_exact(const SystemParams& p) {
    validate(p);
    check_gamma_cap(p.n + p.n, "outage_zf_exact");
    if (p.n <= p.m)
        throw feasibility_error(
            "outage_zf_exact: zero-forcing requires n > m (n = " +
            std::to_string(p.n) + ", m = " + std::to_string(p.m) + ")");
    if (p.gamma_th == 0) return 0.0;
    const Kernel K = make_kernel(p);
    return finalize_exact(dual_hop_raw(p.n - p.m, p.n, K), "outage_zf_exact");
}

double outage_zf_highsnr(const SystemParams& p) {
    validate(p);
    if (p.n <= p.m)
        throw feasibility_error(
            "outage_zf_highsnr: zero-forcing requires n > m");
    check_gamma_cap(p.n - p.m + 1, "outage_zf_highsnr");
    if (p.gamma_th == 0) return 0.0;
    const LD b = (LD)p.gamma_th / (LD)p.rho1;
    return finalize_approx(powi_ld(b, p.n - p.m) /
                           specfun::detail::gamma_int_t<LD>(p.n - p.m + 1));
}

double outage_largen(const SystemParams& p) {
    validate(p);
    check_gamma_cap(p.n + p.n, "outage_largen");
    if (p.gamma_th == 0) return 0.0;
    const Kernel K = make_kernel(p);
    return finalize_exact(dual_hop_raw(p.n, p.n, K), "outage_largen");
}

double cdf_z_unified(const SystemParams& p, double z) {
    validate(p);
    check_gamma_cap(std::max(p.n, p.m) + p.n + 2, "cdf_z_unified");
    if (!(z >= 0))
        throw invalid_parameter_error("cdf_z_unified: z must be >= 0");
    if (z == 0) return 0.0;
    const LD zr = (LD)z / (LD)p.rho1;
    const LD gn = specfun::detail::gamma_int_t<LD>(p.n);
    const LD base = 1.0L - specfun::detail::upper_inc_gamma_int_t<LD>(p.n, zr) / gn;
    if (p.m == 0) return finalize_exact(base, "cdf_z_unified");
    require_equal_power(p, "cdf_z_unified");
    const LD rho_i = (LD)mean_rho_i(p);

    const int m1 = std::max(0, p.n - p.m) + 1;
    NeumaierSum<LD> S;
    for (int m = m1; m <= p.n; ++m) {
        const LD denom = specfun::detail::gamma_int_t<LD>(m) *
                         specfun::detail::gamma_int_t<LD>(p.n - m + 2) *
                         specfun::detail::gamma_int_t<LD>(m - p.n + p.m);
        const LD hyp = specfun::detail::gauss_2f1_family_t<LD>(
            p.m + 1, p.n - m + 1, rho_i * zr);
        S.add(powi_ld(rho_i, p.n - m + 1) * hyp / denom);
    }
    const LD raw = base + specfun::detail::gamma_int_t<LD>(p.m + 1) *
                              std::exp(-zr) * powi_ld(zr, p.n) * S.value();
    return finalize_exact(raw, "cdf_z_unified");
}

double cdf_z_piecewise(const SystemParams& p, double z) {
    validate(p);
    check_gamma_cap(p.n, "cdf_z_piecewise");
    if (!(z >= 0))
        throw invalid_parameter_error("cdf_z_piecewise: z must be >= 0");
    if (z == 0) return 0.0;
    const LD zr = (LD)z / (LD)p.rho1;
    if (p.m == 0) {
        const LD raw =
            1.0L -
            specfun::detail::upper_inc_gamma_int_t<LD>(p.n, zr) /
                specfun::detail::gamma_int_t<LD>(p.n);
        return finalize_exact(raw, "cdf_z_piecewise");
    }
    require_equal_power(p, "cdf_z_piecewise");
    const LD rho_i = (LD)mean_rho_i(p);
    const LD q = rho_i * zr;  // (rho_I/rho1) z
    const LD denom_m = powi_ld(1.0L + q, p.m);

    NeumaierSum<LD> S;
    LD zpow = 1;  // zr^{m-1} / (m-1)!
    for (int m = 1; m <= p.n; ++m) {
        if (m > 1) zpow *= zr / (m - 1);
        LD am;
        if (p.n >= p.m + m) {
            am = 1;
        } else {
            LD inner = 1;
            LD cb = 1;  // C(M, i)
            LD qp = 1;  // q^i
            for (int i = 1; i <= p.n - m; ++i) {
                cb = cb * (p.m - i + 1) / i;
                qp *= q;
                inner += cb * qp;
            }
            am = inner / denom_m;
        }
        S.add(am * zpow);
    }
    const LD raw = 1.0L - std::exp(-zr) * S.value();
    return finalize_exact(raw, "cdf_z_piecewise");
}

OutageValue outage_mmse_exact(const SystemParams& p, double tol) {
    validate(p);
    check_gamma_cap(std::max(p.n + p.n, p.m + 2), "outage_mmse_exact");
    if (!(tol > 0))
        throw invalid_parameter_error("outage_mmse_exact: tol must be > 0");
    if (p.gamma_th == 0) return {0.0, std::nullopt};
    const Kernel K = make_kernel(p);
    if (p.m == 0)
        return {finalize_exact(dual_hop_raw(p.n, p.n, K), "outage_mmse_exact"),
                std::nullopt};
    require_equal_power(p, "outage_mmse_exact");
    const LD rho_i = (LD)mean_rho_i(p);
    const int n = p.n;

    const LD part1 = dual_hop_raw(n, n, K);

    const int m1 = std::max(0, n - p.m) + 1;
    long n_calls = 0;
    {
        long n_jk = 0;
        for (int j = 0; j <= n; ++j) n_jk += n + j;
        n_calls = (long)(n - m1 + 1) * n_jk;
    }

    const LD g_out = std::exp(-K.b - K.c) * powi_ld(K.b, n) *
                     specfun::detail::gamma_int_t<LD>(p.m + 1) /
                     specfun::detail::gamma_int_t<LD>(n);
    NeumaierSum<LD> part2;
    specfun::QuadratureResult agg{0.0, 0.0, 0, true};

    for (int m = m1; m <= n; ++m) {
        const LD am =
            powi_ld(rho_i, n - m + 1) /
            (specfun::detail::gamma_int_t<LD>(m) *
             specfun::detail::gamma_int_t<LD>(n - m + 2) *
             specfun::detail::gamma_int_t<LD>(m - n + p.m));
        const int hyp_b = n - m + 1;
        LD cnj = 1;
        for (int j = 0; j <= n; ++j) {
            if (j > 0) cnj = cnj * (n - j + 1) / j;
            const LD dp = powi_ld(K.d, n - j);
            const int top = n + j - 1;
            LD ck = 1;
            for (int k = 0; k <= top; ++k) {
                if (k > 0) ck = ck * (top - k + 1) / k;
                const LD coeff =
                    g_out * am * cnj * dp * ck * powi_ld(K.c, top - k);
                const int xpow = k - n;
                auto f = [&K, xpow, hyp_b, rho_i, mm = p.m](LD x) -> LD {
                    if (x <= 0) return 0;
                    const LD t = -K.bp / x - x;
                    const LD e = std::exp(t);
                    if (e == 0) return 0;
                    const LD zz = rho_i * K.b * (1.0L + (K.c + K.d) / x);
                    const LD hyp = specfun::detail::gauss_2f1_family_t<LD>(
                        mm + 1, hyp_b, zz);
                    return e * powi_ld(x, xpow) * hyp;
                };
                add_term_integral(f, coeff, tol, n_calls,
                                  "outage_mmse_exact term (m=" +
                                      std::to_string(m) +
                                      ", j=" + std::to_string(j) +
                                      ", k=" + std::to_string(k) + ")",
                                  part2, agg);
            }
        }
    }
    const LD raw = part1 + part2.value();
    return {finalize_exact(raw, "outage_mmse_exact"), agg};
}

double outage_mmse_lower(const SystemParams& p) {
    validate(p);
    check_gamma_cap(std::max(p.n + p.n, p.m + 2), "outage_mmse_lower");
    if (p.gamma_th == 0) return 0.0;
    const Kernel K = make_kernel(p);
    const LD gn = specfun::detail::gamma_int_t<LD>(p.n);
    const LD hop2 = specfun::detail::upper_inc_gamma_int_t<LD>(p.n, K.c) / gn;
    if (p.m == 0) {
        const LD hop1 =
            specfun::detail::upper_inc_gamma_int_t<LD>(p.n, K.b) / gn;
        return finalize_exact(1.0L - hop2 * hop1, "outage_mmse_lower");
    }
    require_equal_power(p, "outage_mmse_lower");
    // survival of the first hop: 1 - F_Z(gamma_th), hypergeometric form
    const LD surv = 1.0L - (LD)cdf_z_unified(p, p.gamma_th);
    return finalize_exact(1.0L - hop2 * surv, "outage_mmse_lower");
}

double outage_mmse_highsnr(const SystemParams& p) {
    validate(p);
    check_gamma_cap(std::max(p.n + 1, p.m + 2), "outage_mmse_highsnr");
    if (p.gamma_th == 0) return 0.0;
    const LD b = (LD)p.gamma_th / (LD)p.rho1;
    const LD mu = (LD)p.rho2 / (LD)p.rho1;
    LD bracket = (1.0L + powi_ld(1.0L / mu, p.n)) /
                 specfun::detail::gamma_int_t<LD>(p.n + 1);
    if (p.m > 0) {
        require_equal_power(p, "outage_mmse_highsnr");
        const LD rho_i = (LD)mean_rho_i(p);
        const int m1 = std::max(0, p.n - p.m) + 1;
        NeumaierSum<LD> S;
        for (int m = m1; m <= p.n; ++m)
            S.add(powi_ld(rho_i, p.n - m + 1) /
                  (specfun::detail::gamma_int_t<LD>(m) *
                   specfun::detail::gamma_int_t<LD>(p.n - m + 2) *
                   specfun::detail::gamma_int_t<LD>(m - p.n + p.m)));
        bracket += specfun::detail::gamma_int_t<LD>(p.m + 1) * S.value();
    }
    return finalize_approx(bracket * powi_ld(b, p.n));
}

double highsnr_coefficient(Scheme s, const SystemParams& p,
                           const InterferenceProfile& profile) {
    validate(p);
    const LD mu = (LD)p.rho2 / (LD)p.rho1;
    switch (s) {
        case Scheme::Mrc: {
            LD e1u = 1;
            if (p.m > 0) {
                check_profile(p, profile, "highsnr_coefficient");
                e1u = (LD)expected_one_plus_u_pow(profile, p.n);
            }
            return static_cast<double>(
                (powi_ld(1.0L / mu, p.n) + e1u) /
                specfun::detail::gamma_int_t<LD>(p.n + 1));
        }
        case Scheme::Zf: {
            if (p.n <= p.m)
                throw feasibility_error(
                    "highsnr_coefficient: zero-forcing requires n > m");
            return static_cast<double>(
                1.0L / specfun::detail::gamma_int_t<LD>(p.n - p.m + 1));
        }
        case Scheme::Mmse: {
            LD bracket = (1.0L + powi_ld(1.0L / mu, p.n)) /
                         specfun::detail::gamma_int_t<LD>(p.n + 1);
            if (p.m > 0) {
                require_equal_power(p, "highsnr_coefficient");
                const LD rho_i = (LD)mean_rho_i(p);
                const int m1 = std::max(0, p.n - p.m) + 1;
                NeumaierSum<LD> S;
                for (int m = m1; m <= p.n; ++m)
                    S.add(powi_ld(rho_i, p.n - m + 1) /
                          (specfun::detail::gamma_int_t<LD>(m) *
                           specfun::detail::gamma_int_t<LD>(p.n - m + 2) *
                           specfun::detail::gamma_int_t<LD>(m - p.n + p.m)));
                bracket += specfun::detail::gamma_int_t<LD>(p.m + 1) * S.value();
            }
            return static_cast<double>(bracket);
        }
    }
    throw invalid_parameter_error("highsnr_coefficient: bad Scheme value");
}

OutageValue evaluate_outage(Scheme s, Method method, const SystemParams& p,
                            double tol) {
    validate(p);
    if (method == Method::LargeN) return {outage_largen(p), std::nullopt};

    InterferenceProfile prof;
    const bool needs_profile =
        (s == Scheme::Mrc) && p.m > 0 && method != Method::LargeN;
    if (needs_profile) prof = build_profile(p.rho_i);

    switch (s) {
        case Scheme::Mrc:
            switch (method) {
                case Method::Exact: return outage_mrc_exact(p, prof, tol);
                case Method::LowerBound:
                    return {outage_mrc_lower(p, prof), std::nullopt};
                case Method::HighSnr:
                    return {outage_mrc_highsnr(p, prof), std::nullopt};
                default: break;
            }
            break;
        case Scheme::Zf:
            switch (method) {
                case Method::Exact: return {outage_zf_exact(p), std::nullopt};
                case Method::LowerBound:
                    throw invalid_parameter_error(
                        "evaluate_outage: no lower-bound form exists for "
                        "zero-forcing");
                case Method::HighSnr:
                    return {outage_zf_highsnr(p), std::nullopt};
                default: break;
            }
            break;
        case Scheme::Mmse:
            switch (method) {
                case Method::Exact: return outage_mmse_exact(p, tol);
                case Method::LowerBound:
                    return {outage_mmse_lower(p), std::nullopt};
                case Method::HighSnr:
                    return {outage_mmse_highsnr(p), std::nullopt};
                default: break;
            }
            break;
    }
    throw invalid_parameter_error("evaluate_outage: bad scheme/method pair");
}

}  // namespace relaylink::analytic
