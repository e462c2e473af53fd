// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#include "relaylink/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace relaylink {

namespace {

long double powi(long double base, int e) {
    // integer power, e may be negative
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-(long)e)
                          : static_cast<unsigned long>(e);
    long double r = 1, p = base;
    while (n) {
        if (n & 1UL) r *= p;
        p *= p;
        n >>= 1UL;
    }
    return inv ? 1.0L / r : r;
}

long double factorial_ld(int n) {
    long double r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

long double binom_ld(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Product form of the generating identity, long double.
long double mgf_product(const std::vector<double>& powers,
                        const std::vector<int>& tau, long double s) {
    long double p = 1;
    for (std::size_t i = 0; i < powers.size(); ++i)
        p *= powi(1.0L + (long double)powers[i] * s, -tau[i]);
    return p;
}

long double mgf_expansion(const std::vector<double>& powers,
                          const std::vector<int>& tau,
                          const std::vector<std::vector<double>>& chi,
                          long double s) {
    long double acc = 0;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        long double base = 1.0L / (1.0L + (long double)powers[i] * s);
        long double bp = 1;
        for (int j = 1; j <= tau[i]; ++j) {
            bp *= base;
            acc += (long double)chi[i][j - 1] * bp;
        }
    }
    return acc;
}

}  // namespace

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::Mrc: return "mrc";
        case Scheme::Zf: return "zf";
        case Scheme::Mmse: return "mmse";
    }
    throw invalid_parameter_error("to_string: bad Scheme value");
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "mrc") return Scheme::Mrc;
    if (name == "zf") return Scheme::Zf;
    if (name == "mmse") return Scheme::Mmse;
    throw invalid_parameter_error("scheme_from_string: unknown scheme '" +
                                  name + "' (expected mrc, zf or mmse)");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
    if (!(linear > 0))
        throw invalid_parameter_error("linear_to_db: value must be > 0");
    return 10.0 * std::log10(linear);
}

void validate(const SystemParams& p) {
    if (p.n < 1)
        throw invalid_parameter_error("SystemParams: n must be >= 1, got " +
                                      std::to_string(p.n));
    if (p.m < 0)
        throw invalid_parameter_error("SystemParams: m must be >= 0, got " +
                                      std::to_string(p.m));
    if (!(p.rho1 > 0) || !std::isfinite(p.rho1))
        throw invalid_parameter_error("SystemParams: rho1 must be finite > 0");
    if (!(p.rho2 > 0) || !std::isfinite(p.rho2))
        throw invalid_parameter_error("SystemParams: rho2 must be finite > 0");
    if (!(p.gamma_th >= 0) || !std::isfinite(p.gamma_th))
        throw invalid_parameter_error(
            "SystemParams: gamma_th must be finite >= 0");
    if (static_cast<int>(p.rho_i.size()) != p.m)
        throw invalid_parameter_error(
            "SystemParams: rho_i has " + std::to_string(p.rho_i.size()) +
            " entries but m = " + std::to_string(p.m));
    for (double r : p.rho_i)
        if (!(r > 0) || !std::isfinite(r))
            throw invalid_parameter_error(
                "SystemParams: every rho_i must be finite > 0");
}

bool is_equal_power(const SystemParams& p, double rel_tol) {
    if (p.rho_i.size() <= 1) return true;
    auto [mn, mx] = std::minmax_element(p.rho_i.begin(), p.rho_i.end());
    return (*mx - *mn) <= rel_tol * *mx;
}

namespace model_detail {

std::vector<std::vector<double>> chi_by_linear_solve(
    const std::vector<double>& powers, const std::vector<int>& tau) {
    const int d = static_cast<int>(powers.size());
    const int m = std::accumulate(tau.begin(), tau.end(), 0);
    const long double rho_max = *std::max_element(powers.begin(), powers.end());
    const long double scale = 1.0L / ((long double)m * std::max(1.0L, rho_max));

    // rows: sample points s_k; columns: (i, j) pairs in profile order
    std::vector<std::vector<long double>> a(
        m, std::vector<long double>(m + 1, 0.0L));
    for (int k = 0; k < m; ++k) {
        const long double s = (long double)(k + 1) * scale;
        int col = 0;
        for (int i = 0; i < d; ++i) {
            long double base = 1.0L / (1.0L + (long double)powers[i] * s);
            long double bp = 1;
            for (int j = 1; j <= tau[i]; ++j) {
                bp *= base;
                a[k][col++] = bp;
            }
        }
        a[k][m] = mgf_product(powers, tau, s);
    }

    // Gaussian elimination, scaled partial pivoting
    std::vector<long double> row_scale(m, 0.0L);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            row_scale[r] = std::max(row_scale[r], std::abs(a[r][c]));
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        long double best = 0;
        for (int r = c; r < m; ++r) {
            long double v = std::abs(a[r][c]) / row_scale[r];
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (piv < 0)
            throw numerical_error(
                "chi_by_linear_solve: singular system for interference "
                "profile");
        std::swap(a[c], a[piv]);
        std::swap(row_scale[c], row_scale[piv]);
        for (int r = c + 1; r < m; ++r) {
            long double f = a[r][c] / a[c][c];
            for (int cc = c; cc <= m; ++cc) a[r][cc] -= f * a[c][cc];
        }
    }
    std::vector<long double> x(m);
    for (int r = m - 1; r >= 0; --r) {
        long double acc = a[r][m];
        for (int c = r + 1; c < m; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }

    std::vector<std::vector<double>> chi(d);
    int col = 0;
    for (int i = 0; i < d; ++i) {
        chi[i].resize(tau[i]);
        for (int j = 0; j < tau[i]; ++j)
            chi[i][j] = static_cast<double>(x[col++]);
    }
    return chi;
}

std::vector<std::vector<double>> chi_by_residues(
    const std::vector<double>& powers, const std::vector<int>& tau) {
    const int d = static_cast<int>(powers.size());

    // prod_k rho_k^{-tau_k}, shared by every coefficient
    long double rho_prod = 1;
    for (int k = 0; k < d; ++k) rho_prod *= powi(powers[k], -tau[k]);

    std::vector<std::vector<double>> chi(d);
    for (int i = 0; i < d; ++i) {
        const long double vi = 1.0L / (long double)powers[i];
        const int nder = tau[i] - 1;

        // derivatives of L = ln prod_{k != i} (s + v_k)^{-tau_k} at s = -v_i:
        // L^{(q+1)} = -q! (-1)^q sum_{k != i} tau_k (v_k - v_i)^{-(q+1)}
        std::vector<long double> lder(nder + 1, 0.0L);  // lder[q] = L^{(q+1)}
        for (int q = 0; q <= nder; ++q) {
            long double acc = 0;
            for (int k = 0; k < d; ++k) {
                if (k == i) continue;
                const long double dv = 1.0L / (long double)powers[k] - vi;
                acc += (long double)tau[k] * powi(dv, -(q + 1));
            }
            const long double sign = (q % 2 == 0) ? 1.0L : -1.0L;
            lder[q] = -factorial_ld(q) * sign * acc;
        }

        // g_i(-v_i) and higher derivatives by Leibniz on g' = L' g
        std::vector<long double> g(nder + 1, 0.0L);
        long double g0 = 1;
        for (int k = 0; k < d; ++k) {
            if (k == i) continue;
            g0 *= powi(1.0L / (long double)powers[k] - vi, -tau[k]);
        }
        g[0] = g0;
        for (int n = 0; n < nder; ++n) {
            long double acc = 0;
            for (int q = 0; q <= n; ++q)
                acc += binom_ld(n, q) * lder[q] * g[n - q];
            g[n + 1] = acc;
        }

        chi[i].resize(tau[i]);
        for (int j = 1; j <= tau[i]; ++j) {
            const long double aij = g[tau[i] - j] / factorial_ld(tau[i] - j);
            chi[i][j - 1] = static_cast<double>(
                powi((long double)powers[i], j) * rho_prod * aij);
        }
    }
    return chi;
}

double chi_identity_residual(const std::vector<double>& powers,
                             const std::vector<int>& tau,
                             const std::vector<std::vector<double>>& chi) {
    const int m = std::accumulate(tau.begin(), tau.end(), 0);
    const long double rho_max = *std::max_element(powers.begin(), powers.end());
    const long double scale = 1.0L / ((long double)(m + 1) * std::max(1.0L, rho_max));
    long double worst = 0;
    for (int r = 0; r < 5; ++r) {
        const long double s = ((long double)r + 0.37L) * scale + scale / 7;
        const long double lhs = mgf_expansion(powers, tau, chi, s);
        const long double rhs = mgf_product(powers, tau, s);
        const long double denom = std::max(std::abs(rhs), 1e-300L);
        worst = std::max(worst, std::abs(lhs - rhs) / denom);
    }
    return static_cast<double>(worst);
}

}  // namespace model_detail

InterferenceProfile build_profile(const std::vector<double>& rho_i,
                                  double group_tol) {
    if (rho_i.empty())
        throw invalid_parameter_error(
            "build_profile: interference power list is empty");
    for (double r : rho_i)
        if (!(r > 0) || !std::isfinite(r))
            throw invalid_parameter_error(
                "build_profile: every power must be finite > 0");
    if (!(group_tol >= 0) || group_tol >= 1)
        throw invalid_parameter_error(
            "build_profile: group_tol must be in [0, 1)");

    std::vector<double> sorted = rho_i;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    InterferenceProfile prof;
    prof.total = static_cast<int>(sorted.size());
    std::size_t i = 0;
    while (i < sorted.size()) {
        const double anchor = sorted[i];
        double sum = 0;
        int count = 0;
        while (i < sorted.size() &&
               (anchor - sorted[i]) <= group_tol * anchor) {
            sum += sorted[i];
            ++count;
            ++i;
        }
        prof.powers.push_back(sum / count);
        prof.tau.push_back(count);
    }

    prof.chi = model_detail::chi_by_linear_solve(prof.powers, prof.tau);
    double res =
        model_detail::chi_identity_residual(prof.powers, prof.tau, prof.chi);
    if (res > 1e-9) {
        auto fallback = model_detail::chi_by_residues(prof.powers, prof.tau);
        double res2 = model_detail::chi_identity_residual(prof.powers,
                                                          prof.tau, fallback);
        if (res2 < res) {
            prof.chi = std::move(fallback);
            res = res2;
        }
        if (res > 1e-9)
            throw numerical_error(
                "build_profile: partial-fraction identity residual " +
                std::to_string(res) +
                " exceeds 1e-9 on both routes; profile too ill-conditioned");
    }
    return prof;
}

double hyperexp_pdf(const InterferenceProfile& profile, double x) {
    if (!(x >= 0))
        throw invalid_parameter_error("hyperexp_pdf: x must be >= 0");
    long double acc = 0;
    for (std::size_t i = 0; i < profile.powers.size(); ++i) {
        const long double rho = profile.powers[i];
        const long double e = std::exp(-(long double)x / rho);
        long double fac = 1;       // (j-1)!
        long double xp = 1;        // x^{j-1}
        long double rp = 1.0L / rho;  // rho^{-j}
        for (int j = 1; j <= profile.tau[i]; ++j) {
            acc += (long double)profile.chi[i][j - 1] * rp * xp * e / fac;
            fac *= j;
            xp *= x;
            rp /= rho;
        }
    }
    return static_cast<double>(acc);
}

double profile_mgf(const InterferenceProfile& profile, double s) {
    return static_cast<double>(
        mgf_product(profile.powers, profile.tau, (long double)s));
}

double expected_one_plus_u_pow(const InterferenceProfile& profile, int n) {
    if (n < 0)
        throw invalid_parameter_error(
            "expected_one_plus_u_pow: exponent must be >= 0");
    // E[U^k] = sum_ij chi_ij rho_i^k Gamma(j+k)/Gamma(j)
    long double acc = 0;
    for (int k = 0; k <= n; ++k) {
        long double moment = 0;
        for (std::size_t i = 0; i < profile.powers.size(); ++i) {
            const long double rk = powi(profile.powers[i], k);
            for (int j = 1; j <= profile.tau[i]; ++j) {
                long double grat = 1;  // Gamma(j+k)/Gamma(j) = prod (j+t)
                for (int t = 0; t < k; ++t) grat *= (j + t);
                moment += (long double)profile.chi[i][j - 1] * rk * grat;
            }
        }
        acc += binom_ld(n, k) * moment;
    }
    return static_cast<double>(acc);
}

}  // namespace relaylink
