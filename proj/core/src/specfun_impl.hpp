// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors
//
// Algorithm bodies for the special-function layer, templated on the working
// precision. The public API instantiates double; the outage engine uses the
// long double instantiation internally because its results live at the far
// end of a 1 - S cancellation.

#ifndef RELAYLINK_SPECFUN_IMPL_HPP
#define RELAYLINK_SPECFUN_IMPL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

namespace relaylink::specfun::detail {

inline constexpr long double kEulerGamma =
    0.577215664901532860606512090082402431042L;

// Compensated (Neumaier) accumulator. All kernel sums go through this.
template <class Real>
struct NeumaierSum {
    Real s = 0;
    Real c = 0;
    void add(Real x) {
        Real t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    Real value() const { return s + c; }
};

template <class Real>
Real gamma_int_t(int n) {
    // caller guarantees 1 <= n <= 170
    static const std::array<Real, 171> table = [] {
        std::array<Real, 171> t{};
        t[1] = 1;
        for (int k = 2; k <= 170; ++k) t[k] = t[k - 1] * Real(k - 1);
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

template <class Real>
Real upper_inc_gamma_int_t(int n, Real x) {
    // Gamma(n, x) = (n-1)! e^{-x} sum_{k<n} x^k / k!
    Real e = std::exp(-x);
    if (e == Real(0)) return 0;  // documented flush; downstream uses ratios
    Real term = 1;
    NeumaierSum<Real> sum;
    sum.add(Real(1));
    for (int k = 1; k < n; ++k) {
        term *= x / Real(k);
        sum.add(term);
    }
    return gamma_int_t<Real>(n) * e * sum.value();
}

// K0 and K1 by the ascending series; valid for 0 < x <= 2.
template <class Real>
void bessel_k01_series(Real x, Real& k0, Real& k1) {
    const Real q = x * x / 4;
    const Real lg = std::log(x / 2) + Real(kEulerGamma);
    Real ti = 1;       // q^k / (k!)^2
    Real tj = 1;       // q^k / (k! (k+1)!)
    Real h = 0;        // H_k
    Real i0 = 1, i1s = 1;  // I0 and I1/(x/2) partial sums
    Real s0 = 0;       // sum H_k q^k/(k!)^2, k >= 1
    Real s1 = 1;       // sum (H_k + H_{k+1}) q^k/(k!(k+1)!), k >= 0 (k=0 term: 1)
    const Real eps = std::numeric_limits<Real>::epsilon() / 2;
    for (int k = 1; k < 64; ++k) {
        ti *= q / (Real(k) * Real(k));
        tj *= q / (Real(k) * Real(k + 1));
        h += Real(1) / Real(k);
        const Real hk1 = h + Real(1) / Real(k + 1);
        i0 += ti;
        i1s += tj;
        s0 += h * ti;
        s1 += (h + hk1) * tj;
        if (ti < eps * i0 && tj < eps * i1s) break;
    }
    const Real i1 = (x / 2) * i1s;
    k0 = -lg * i0 + s0;
    k1 = Real(1) / x + lg * i1 - (x / 4) * s1;
}

// K0 and K1 for x > 2 by the Steed/Thompson-Barnett continued fraction
// (coefficients alpha_k = (k - 1/2)^2, beta_k = 2(x + k) at order zero).
template <class Real>
void bessel_k01_cf2(Real x, Real& k0, Real& k1) {
    const Real eps = std::numeric_limits<Real>::epsilon() / 2;
    const Real a1 = Real(0.25L);
    Real b = 2 * (1 + x);
    Real d = 1 / b;
    Real h = d, delh = d;
    Real q1 = 0, q2 = 1;
    Real a = -a1;
    Real q = a1, c = a1;
    Real s = 1 + q * delh;
    for (int i = 2; i <= 40000; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const Real qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2;
        d = 1 / (b + a * d);
        delh = (b * d - 1) * delh;
        h += delh;
        const Real dels = q * delh;
        s += dels;
        if (std::abs(dels) < eps * std::abs(s)) break;
    }
    h = a1 * h;
    const Real pref =
        std::sqrt(std::numbers::pi_v<Real> / (2 * x)) * std::exp(-x);
    k0 = pref / s;
    k1 = k0 * (x + Real(0.5L) - h) / x;
}

template <class Real>
void bessel_k01_t(Real x, Real& k0, Real& k1) {
    if (x <= Real(2))
        bessel_k01_series(x, k0, k1);
    else
        bessel_k01_cf2(x, k0, k1);
}

// caller guarantees x > 0; v may be any integer (K_{-v} = K_v)
template <class Real>
Real bessel_k_int_t(int v, Real x) {
    if (v < 0) v = -v;
    Real k0, k1;
    bessel_k01_t(x, k0, k1);
    if (v == 0) return k0;
    if (v == 1) return k1;
    // upward recurrence K_{j+1} = K_{j-1} + (2j/x) K_j; monotone growth, stable
    Real km = k0, k = k1;
    for (int j = 1; j < v; ++j) {
        Real kp = km + (2 * Real(j) / x) * k;
        km = k;
        k = kp;
        if (std::isinf(k)) return k;
    }
    return k;
}

// Fills out[i] = sbk(vmin + i, B) where sbk(v, B) = B^{v/2} K_v(2 sqrt(B)).
// Uses g_v = B^{v/2} K_v(2 sqrt(B)) with g_{v+1} = v g_v + B g_{v-1} and
// sbk(-v, B) = B^{-v} g_v for v > 0. caller guarantees B > 0, vmin <= vmax.
template <class Real>
void scaled_bessel_k_row_t(int vmin, int vmax, Real B, Real* out) {
    const int gmax = std::max(vmax, -vmin);
    const Real sq = std::sqrt(B);
    Real k0, k1;
    bessel_k01_t(2 * sq, k0, k1);
    std::vector<Real> g(static_cast<std::size_t>(std::max(gmax, 1)) + 1);
    g[0] = k0;
    g[1] = sq * k1;
    for (int v = 1; v < gmax; ++v) g[v + 1] = Real(v) * g[v] + B * g[v - 1];
    for (int v = vmin; v <= vmax; ++v) {
        Real val;
        if (v >= 0)
            val = g[static_cast<std::size_t>(v)];
        else
            val = std::pow(B, Real(v)) * g[static_cast<std::size_t>(-v)];
        out[v - vmin] = val;
    }
}

template <class Real>
Real scaled_bessel_k_t(int v, Real B) {
    Real out;
    scaled_bessel_k_row_t(v, v, B, &out);
    return out;
}

// 2F1(a, b; b+1; -z) for integer a, b >= 1, z >= 0.
//
// z <= 16: Pfaff-transformed series (1+z)^{-a} 2F1(a, 1; b+1; z/(1+z)),
// whose terms are all positive. z > 16: finite antiderivative form of the
// Euler integral b * Integral_0^1 t^{b-1} (1+zt)^{-a} dt; its alternating
// cancellation is bounded (~2^b) for large z, while at small z it loses
// ~z^{-b} digits, which is exactly why the series takes over there.
template <class Real>
Real gauss_2f1_family_t(int a, int b, Real z) {
    const Real eps = std::numeric_limits<Real>::epsilon() / 2;
    if (z == Real(0)) return 1;
    if (z <= Real(16)) {
        const Real w = z / (1 + z);
        Real term = 1;
        NeumaierSum<Real> sum;
        sum.add(term);
        for (int n = 1; n <= 100000; ++n) {
            term *= Real(a + n - 1) / Real(b + n) * w;
            sum.add(term);
            if (term < eps * sum.value()) break;
        }
        return std::pow(1 + z, Real(-a)) * sum.value();
    }
    // Q_i = [(1+z)^{i-a+1} - 1] / (i-a+1), or ln(1+z) when i = a-1
    const Real l1z = std::log1p(z);
    NeumaierSum<Real> sum;
    Real bin = 1;  // C(b-1, i)
    for (int i = 0; i <= b - 1; ++i) {
        Real qi;
        if (i == a - 1) {
            qi = l1z;
        } else {
            const Real e = Real(i - a + 1);
            qi = std::expm1(e * l1z) / e;
        }
        const Real sgn = ((b - 1 - i) % 2 == 0) ? Real(1) : Real(-1);
        sum.add(sgn * bin * qi);
        bin *= Real(b - 1 - i) / Real(i + 1);
    }
    const Real s = sum.value();
    const Real blogz = Real(b) * std::log(z);
    // keep the z^{-b} scaling in log space when it would underflow the range
    if (blogz > std::log(std::numeric_limits<Real>::max()) - 8)
        return std::exp(std::log(Real(b)) + std::log(s) - blogz);
    return Real(b) * s / std::pow(z, Real(b));
}

// ---------------------------------------------------------------------------
// Adaptive Gauss(7)/Kronrod(15) quadrature on (0, inf) via x = t/(1-t).

// Positive half-nodes of the 15-point Kronrod extension of 7-point Gauss,
// standard published values; even indices are the embedded Gauss-7 nodes.
// Validated in-tree by polynomial-exactness tests (degree 22 / degree 13).
inline constexpr long double kGk15Nodes[8] = {
    0.00000000000000000000000000000000000e+00L,
    2.07784955007898467600689403773244913e-01L,
    4.05845151377397166906606412076961463e-01L,
    5.86087235467691130294144838258729598e-01L,
    7.41531185599394439863864773280788407e-01L,
    8.64864423359769072789712788640926201e-01L,
    9.49107912342758524526189684047851262e-01L,
    9.91455371120812639206854697526328517e-01L,
};
inline constexpr long double kGk15Weights[8] = {
    2.09482141084727828012999174891714264e-01L,
    2.04432940075298892414161999234649085e-01L,
    1.90350578064785409913256402421013683e-01L,
    1.69004726639267902826583426598550284e-01L,
    1.40653259715525918745189590510237920e-01L,
    1.04790010322250183839876322541518017e-01L,
    6.30920926299785532907006631892042867e-02L,
    2.29353220105292249637320080589695920e-02L,
};
inline constexpr long double kGauss7Weights[4] = {
    4.17959183673469387755102040816326531e-01L,
    3.81830050505118944950369775488975134e-01L,
    2.79705391489276667901467771423779582e-01L,
    1.29484966168869693270611432679082018e-01L,
};

template <class Real>
struct QuadResultT {
    Real value = 0;
    Real abs_error = 0;
    long evaluations = 0;
    bool converged = false;
    bool bad_value = false;  // integrand produced NaN/inf
};

// One Gauss-Kronrod 7/15 pass over [a, b]; returns {K15, |K15 - G7|}.
template <class Real, class F>
std::pair<Real, Real> gk15_panel(F&& f, Real a, Real b) {
    const Real c = (a + b) / 2;
    const Real h = (b - a) / 2;
    const Real f0 = f(c);
    Real k15 = Real(kGk15Weights[0]) * f0;
    Real g7 = Real(kGauss7Weights[0]) * f0;
    for (int i = 1; i < 8; ++i) {
        const Real dx = h * Real(kGk15Nodes[i]);
        const Real fs = f(c + dx) + f(c - dx);
        k15 += Real(kGk15Weights[i]) * fs;
        if (i % 2 == 0) g7 += Real(kGauss7Weights[i / 2]) * fs;
    }
    k15 *= h;
    g7 *= h;
    return {k15, std::abs(k15 - g7)};
}

// Adaptive bisection on [lo, hi] with a worst-interval-first policy.
template <class Real, class F>
QuadResultT<Real> adaptive_gk(F&& f, Real lo, Real hi, Real abs_tol,
                              long budget) {
    struct Interval {
        Real err, a, b, value;
        bool operator<(const Interval& o) const { return err < o.err; }
    };
    std::vector<Interval> heap;  // max-heap by err via std::*_heap
    QuadResultT<Real> res;

    // exact totals over the current partition
    auto totals = [&heap] {
        NeumaierSum<Real> v, e;
        for (const auto& iv : heap) {
            v.add(iv.value);
            e.add(iv.err);
        }
        return std::pair<Real, Real>(v.value(), e.value());
    };

    // start from a graded partition: mapped decay integrands put most mass
    // towards t = 0..0.9 and need resolution near both ends
    const Real cuts[] = {Real(0),        Real(0.0625L), Real(0.125L),
                         Real(0.25L),    Real(0.5L),    Real(0.75L),
                         Real(0.875L),   Real(0.9375L), Real(1)};
    bool bad = false;
    for (int i = 0; i + 1 < 9; ++i) {
        const Real a = lo + (hi - lo) * cuts[i];
        const Real b = lo + (hi - lo) * cuts[i + 1];
        auto [v, e] = gk15_panel(f, a, b);
        res.evaluations += 15;
        if (!std::isfinite(v) || !std::isfinite(e)) bad = true;
        heap.push_back({e, a, b, v});
        std::push_heap(heap.begin(), heap.end());
    }

    Real err_run = 0;
    for (const auto& iv : heap) err_run += iv.err;

    while (true) {
        if (bad) {
            auto [value, err] = totals();
            res.value = value;
            res.abs_error = err;
            res.bad_value = true;
            return res;
        }
        if (err_run <= abs_tol) {
            // running error bound may have drifted; certify with a full pass
            auto [value, err] = totals();
            res.value = value;
            res.abs_error = err;
            err_run = err;
            if (err <= abs_tol) {
                res.converged = true;
                return res;
            }
            continue;
        }
        if (res.evaluations + 30 > budget) {
            auto [value, err] = totals();
            res.value = value;
            res.abs_error = err;
            return res;  // converged stays false
        }
        std::pop_heap(heap.begin(), heap.end());
        const Interval iv = heap.back();
        heap.pop_back();
        const Real mid = (iv.a + iv.b) / 2;
        if (mid <= iv.a || mid >= iv.b) {
            // interval at rounding resolution; accept its estimate as-is
            err_run -= iv.err;
            heap.push_back({Real(0), iv.a, iv.b, iv.value});
            std::push_heap(heap.begin(), heap.end());
            continue;
        }
        auto [v1, e1] = gk15_panel(f, iv.a, mid);
        auto [v2, e2] = gk15_panel(f, mid, iv.b);
        res.evaluations += 30;
        if (!std::isfinite(v1) || !std::isfinite(v2)) bad = true;
        err_run += e1 + e2 - iv.err;
        heap.push_back({e1, iv.a, mid, v1});
        std::push_heap(heap.begin(), heap.end());
        heap.push_back({e2, mid, iv.b, v2});
        std::push_heap(heap.begin(), heap.end());
    }
}

template <class Real, class F>
QuadResultT<Real> integrate_semi_infinite_t(F&& f, Real abs_tol, long budget) {
    auto mapped = [&f](Real t) {
        const Real om = 1 - t;
        const Real x = t / om;
        if (!std::isfinite(x)) return Real(0);
        const Real fx = f(x);
        return fx / (om * om);
    };
    return adaptive_gk<Real>(mapped, Real(0), Real(1), abs_tol, budget);
}

}  // namespace relaylink::specfun::detail

#endif  // RELAYLINK_SPECFUN_IMPL_HPP
