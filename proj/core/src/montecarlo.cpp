// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#include "relaylink/montecarlo.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "relaylink/rng.hpp"

namespace relaylink::montecarlo {

namespace {

using CD = std::complex<double>;
using VecC = Eigen::VectorXcd;
using MatC = Eigen::MatrixXcd;

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr int kMaxRedraws = 64;

Eigen::Map<const VecC> as_vec(const std::vector<CD>& v) {
    return {v.data(), static_cast<Eigen::Index>(v.size())};
}

Eigen::Map<const MatC> as_mat(const std::vector<CD>& v, int n, int m) {
    return {v.data(), n, m};
}

void check_draw_shape(const ChannelDraw& d, const SystemParams& p,
                      const char* what) {
    if (d.n != p.n || d.m != p.m ||
        d.h1.size() != static_cast<std::size_t>(p.n) ||
        d.h2.size() != static_cast<std::size_t>(p.n) ||
        d.hi.size() != static_cast<std::size_t>(p.n) * p.m)
        throw invalid_parameter_error(
            std::string(what) + ": draw shape does not match parameters");
}

// gamma = Z rho2 y2 / (rho2 y2 + 1 + Z): the dual-hop SINR map shared by
// every scheme once the first-hop statistic Z is known.
double dual_hop_gamma(double z, double y2, double rho2) {
    const double g2 = rho2 * y2;
    return z * g2 / (g2 + 1.0 + z);
}

// First-hop Z for the reduced route. Fills from Eigen views so the per-draw
// API and the threaded hot path share one implementation.
struct FirstHop {
    static double mrc(const Eigen::Ref<const VecC>& h1,
                      const Eigen::Ref<const MatC>& hi,
                      const SystemParams& p) {
        const double y1 = h1.squaredNorm();
        if (y1 == 0.0)
            throw degenerate_draw_error("combiner_mrc: zero channel vector");
        double u1 = 0.0;
        for (int i = 0; i < p.m; ++i)
            u1 += p.rho_i[static_cast<std::size_t>(i)] *
                  std::norm(h1.dot(hi.col(i)));
        u1 /= y1;
        return p.rho1 * y1 / (u1 + 1.0);
    }

    // residual of projecting h1 onto the interference subspace
    static double zf_y3(const Eigen::Ref<const VecC>& h1,
                        const Eigen::Ref<const MatC>& hi,
                        Eigen::HouseholderQR<MatC>& qr, VecC& scratch) {
        if (hi.cols() == 0) return h1.squaredNorm();
        qr.compute(hi);
        const auto& qrm = qr.matrixQR();
        for (int i = 0; i < hi.cols(); ++i)
            if (std::abs(qrm(i, i)) == 0.0)
                throw degenerate_draw_error(
                    "combiner_zf: rank-deficient interference matrix");
        scratch = qr.solve(h1);
        return (h1 - hi * scratch).squaredNorm();
    }

    // Z = rho1 h1^H (sum_i rho_i h_i h_i^H + I)^{-1} h1
    static double mmse(const Eigen::Ref<const VecC>& h1,
                       const Eigen::Ref<const MatC>& hi,
                       const SystemParams& p, MatC& r,
                       Eigen::LLT<MatC>& llt, VecC& scratch) {
        r.setIdentity(p.n, p.n);
        for (int i = 0; i < p.m; ++i)
            r.noalias() += p.rho_i[static_cast<std::size_t>(i)] *
                           (hi.col(i) * hi.col(i).adjoint());
        llt.compute(r);
        if (llt.info() != Eigen::Success)
            throw degenerate_draw_error(
                "combiner_mmse: covariance not positive definite");
        scratch = llt.solve(h1);
        return p.rho1 * h1.dot(scratch).real();
    }
};

}  // namespace

ChannelDraw draw_channel(const SystemParams& p, std::uint64_t seed,
                         std::uint64_t trial, std::uint32_t attempt) {
    validate(p);
    rng::TrialStream st(seed, trial, attempt);
    ChannelDraw d;
    d.n = p.n;
    d.m = p.m;
    auto fill = [&st](std::vector<CD>& v, std::size_t count) {
        v.resize(count);
        for (auto& e : v) {
            auto [x, y] = st.normal_pair();
            e = CD(x * kInvSqrt2, y * kInvSqrt2);
        }
    };
    fill(d.h1, static_cast<std::size_t>(p.n));
    fill(d.h2, static_cast<std::size_t>(p.n));
    fill(d.hi, static_cast<std::size_t>(p.n) * p.m);
    return d;
}

std::vector<CD> combiner_mrc(const ChannelDraw& d) {
    auto h1 = as_vec(d.h1);
    const double nrm = h1.norm();
    if (nrm == 0.0)
        throw degenerate_draw_error("combiner_mrc: zero channel vector");
    std::vector<CD> w(d.h1.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = std::conj(d.h1[i]) / nrm;
    return w;
}

std::vector<CD> combiner_zf(const ChannelDraw& d) {
    if (d.n <= d.m)
        throw feasibility_error("combiner_zf: requires n > m (n = " +
                                std::to_string(d.n) +
                                ", m = " + std::to_string(d.m) + ")");
    auto h1 = as_vec(d.h1);
    if (d.m == 0) {
        ChannelDraw tmp = d;
        return combiner_mrc(tmp);
    }
    auto hi = as_mat(d.hi, d.n, d.m);
    Eigen::HouseholderQR<MatC> qr(hi);
    const auto& qrm = qr.matrixQR();
    for (int i = 0; i < d.m; ++i)
        if (std::abs(qrm(i, i)) == 0.0)
            throw degenerate_draw_error(
                "combiner_zf: rank-deficient interference matrix");
    const VecC x = qr.solve(h1);
    const VecC v = h1 - hi * x;
    const double nrm = v.norm();
    if (nrm == 0.0)
        throw degenerate_draw_error(
            "combiner_zf: channel lies in the interference subspace");
    std::vector<CD> w(static_cast<std::size_t>(d.n));
    for (int i = 0; i < d.n; ++i)
        w[static_cast<std::size_t>(i)] = std::conj(v(i)) / nrm;
    return w;
}

std::vector<CD> combiner_mmse(const ChannelDraw& d, const SystemParams& p) {
    check_draw_shape(d, p, "combiner_mmse");
    if (p.m > 0 && !is_equal_power(p))
        throw unsupported_profile_error(
            "combiner_mmse: literal form requires equal interferer powers");
    auto h1 = as_vec(d.h1);
    auto hi = as_mat(d.hi, d.n, d.m);
    const double rho_inv =
        p.m > 0 ? 1.0 / p.rho_i[0] : 1.0;  // with m = 0 any scale works
    MatC a = rho_inv * MatC::Identity(d.n, d.n);
    a.noalias() += h1 * h1.adjoint();
    if (d.m > 0) a.noalias() += hi * hi.adjoint();
    Eigen::LLT<MatC> llt(a);
    if (llt.info() != Eigen::Success)
        throw degenerate_draw_error(
            "combiner_mmse: covariance not positive definite");
    const VecC x = llt.solve(h1);
    std::vector<CD> w(static_cast<std::size_t>(d.n));
    for (int i = 0; i < d.n; ++i)
        w[static_cast<std::size_t>(i)] = std::conj(x(i));
    return w;
}

SinrSample sinr_scheme(const ChannelDraw& d, const SystemParams& p, Scheme s) {
    validate(p);
    check_draw_shape(d, p, "sinr_scheme");
    auto h1 = as_vec(d.h1);
    auto h2 = as_vec(d.h2);
    auto hi = as_mat(d.hi, d.n, d.m);

    double z = 0.0;
    switch (s) {
        case Scheme::Mrc:
            z = FirstHop::mrc(h1, hi, p);
            break;
        case Scheme::Zf: {
            if (d.n <= d.m)
                throw feasibility_error("sinr_scheme: zf requires n > m");
            Eigen::HouseholderQR<MatC> qr;
            VecC scratch;
            z = p.rho1 * FirstHop::zf_y3(h1, hi, qr, scratch);
            break;
        }
        case Scheme::Mmse: {
            MatC r;
            Eigen::LLT<MatC> llt;
            VecC scratch;
            z = FirstHop::mmse(h1, hi, p, r, llt, scratch);
            break;
        }
    }
    const double y2 = h2.squaredNorm();
    return {dual_hop_gamma(z, y2, p.rho2), z};
}

SinrSample sinr_generic(const ChannelDraw& d, const SystemParams& p,
                        Scheme s) {
    validate(p);
    check_draw_shape(d, p, "sinr_generic");
    const int n = d.n;

    std::vector<CD> w1;
    switch (s) {
        case Scheme::Mrc: w1 = combiner_mrc(d); break;
        case Scheme::Zf: w1 = combiner_zf(d); break;
        case Scheme::Mmse: w1 = combiner_mmse(d, p); break;
    }

    auto dot_wh = [&w1, n](const CD* col) {
        CD acc = 0;
        for (int i = 0; i < n; ++i) acc += w1[static_cast<std::size_t>(i)] * col[i];
        return acc;
    };
    const CD wh1 = dot_wh(d.h1.data());
    double w_norm2 = 0.0;
    for (const CD& e : w1) w_norm2 += std::norm(e);

    // scheme-specific relay gain normalization
    double omega2 = 0.0;
    switch (s) {
        case Scheme::Mrc: {
            double y1 = 0.0;
            for (const CD& e : d.h1) y1 += std::norm(e);
            double u1 = 0.0;
            for (int i = 0; i < d.m; ++i) {
                CD acc = 0;
                for (int a = 0; a < n; ++a)
                    acc += std::conj(d.h1[static_cast<std::size_t>(a)]) *
                           d.hi[static_cast<std::size_t>(i * n + a)];
                u1 += p.rho_i[static_cast<std::size_t>(i)] * std::norm(acc);
            }
            u1 /= y1;
            omega2 = p.rho2 / (y1 * p.rho1 + u1 + 1.0);
            break;
        }
        case Scheme::Zf:
            omega2 = p.rho2 / (std::norm(wh1) * p.rho1 + 1.0);
            break;
        case Scheme::Mmse: {
            double interf = 0.0;
            for (int i = 0; i < d.m; ++i)
                interf += p.rho_i[static_cast<std::size_t>(i)] *
                          std::norm(dot_wh(d.hi.data() +
                                           static_cast<std::size_t>(i * n)));
            omega2 = p.rho2 / (std::norm(wh1) * p.rho1 + interf + w_norm2);
            break;
        }
    }
    const double omega = std::sqrt(omega2);

    // W = omega (h2^H column) (w1 row) / ||h2||, then row = h2 W
    double h2n2 = 0.0;
    for (const CD& e : d.h2) h2n2 += std::norm(e);
    const double h2n = std::sqrt(h2n2);
    std::vector<std::vector<CD>> w_mat(static_cast<std::size_t>(n),
                                       std::vector<CD>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            w_mat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                omega * std::conj(d.h2[static_cast<std::size_t>(a)]) *
                w1[static_cast<std::size_t>(b)] / h2n;
    std::vector<CD> row(static_cast<std::size_t>(n), CD(0, 0));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            row[static_cast<std::size_t>(b)] +=
                d.h2[static_cast<std::size_t>(a)] *
                w_mat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];

    auto dot_row = [&row, n](const CD* col) {
        CD acc = 0;
        for (int i = 0; i < n; ++i)
            acc += row[static_cast<std::size_t>(i)] * col[i];
        return acc;
    };
    const double num = p.rho1 * std::norm(dot_row(d.h1.data()));
    double den = 1.0;  // destination noise
    for (int i = 0; i < d.m; ++i)
        den += p.rho_i[static_cast<std::size_t>(i)] *
               std::norm(dot_row(d.hi.data() + static_cast<std::size_t>(i * n)));
    double row_n2 = 0.0;
    for (const CD& e : row) row_n2 += std::norm(e);
    den += row_n2;  // forwarded relay noise

    // first-hop statistic of the same combiner
    double interf_w = 0.0;
    for (int i = 0; i < d.m; ++i)
        interf_w += p.rho_i[static_cast<std::size_t>(i)] *
                    std::norm(dot_wh(d.hi.data() +
                                     static_cast<std::size_t>(i * n)));
    const double z = p.rho1 * std::norm(wh1) / (interf_w + w_norm2);

    return {num / den, z};
}

double z_statistic(const ChannelDraw& d, const SystemParams& p) {
    validate(p);
    check_draw_shape(d, p, "z_statistic");
    if (p.m == 0)
        throw invalid_parameter_error(
            "z_statistic: requires at least one interferer");
    if (!is_equal_power(p))
        throw unsupported_profile_error(
            "z_statistic: requires equal interferer powers");
    const double rho_int = p.rho_i[0];

    // route 1: Z of the literal MMSE combiner
    const std::vector<CD> w1 = combiner_mmse(d, p);
    auto h1 = as_vec(d.h1);
    auto hi = as_mat(d.hi, d.n, d.m);
    CD wh1 = 0;
    for (int i = 0; i < d.n; ++i)
        wh1 += w1[static_cast<std::size_t>(i)] * d.h1[static_cast<std::size_t>(i)];
    double interf = 0.0;
    for (int i = 0; i < d.m; ++i) {
        CD acc = 0;
        for (int a = 0; a < d.n; ++a)
            acc += w1[static_cast<std::size_t>(a)] *
                   d.hi[static_cast<std::size_t>(i * d.n + a)];
        interf += rho_int * std::norm(acc);
    }
    double w_norm2 = 0.0;
    for (const CD& e : w1) w_norm2 += std::norm(e);
    const double z1 = p.rho1 * std::norm(wh1) / (interf + w_norm2);

    // route 2: quadratic form (rho1/rho_I) h1^H (H H^H + I/rho_I)^{-1} h1
    MatC r = (1.0 / rho_int) * MatC::Identity(d.n, d.n);
    r.noalias() += hi * hi.adjoint();
    Eigen::LLT<MatC> llt(r);
    if (llt.info() != Eigen::Success)
        throw degenerate_draw_error("z_statistic: covariance not positive "
                                    "definite");
    const VecC x = llt.solve(h1);
    const double z2 = (p.rho1 / rho_int) * h1.dot(x).real();

    const double rel = std::abs(z1 - z2) / std::max(std::abs(z2), 1e-300);
    if (rel > 1e-10)
        throw numerical_error(
            "z_statistic: combiner route and quadratic-form route disagree "
            "by relative " +
            std::to_string(rel));
    return z2;
}

EstimateResult estimate_outage(const SystemParams& p, Scheme s, long trials,
                               std::uint64_t seed, int workers) {
    validate(p);
    if (trials < 1000)
        throw invalid_parameter_error(
            "estimate_outage: at least 1000 trials required, got " +
            std::to_string(trials));
    if (s == Scheme::Zf && p.n <= p.m)
        throw feasibility_error("estimate_outage: zf requires n > m");

    int w = workers > 0
                ? workers
                : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    w = static_cast<int>(std::min<long>(w, trials));

    struct Shard {
        long count = 0;
        long redraws = 0;
    };
    std::vector<Shard> shards(static_cast<std::size_t>(w));
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto run_range = [&](long lo, long hi, Shard& shard) {
        try {
            VecC h1(p.n), h2(p.n), scratch;
            MatC hi_mat(p.n, p.m), r;
            Eigen::HouseholderQR<MatC> qr;
            Eigen::LLT<MatC> llt;
            for (long t = lo; t < hi; ++t) {
                double gamma = 0.0;
                bool done = false;
                for (std::uint32_t attempt = 0; attempt <= kMaxRedraws;
                     ++attempt) {
                    rng::TrialStream st(seed, static_cast<std::uint64_t>(t),
                                        attempt);
                    for (int i = 0; i < p.n; ++i) {
                        auto [x, y] = st.normal_pair();
                        h1(i) = CD(x * kInvSqrt2, y * kInvSqrt2);
                    }
                    for (int i = 0; i < p.n; ++i) {
                        auto [x, y] = st.normal_pair();
                        h2(i) = CD(x * kInvSqrt2, y * kInvSqrt2);
                    }
                    for (int c = 0; c < p.m; ++c)
                        for (int i = 0; i < p.n; ++i) {
                            auto [x, y] = st.normal_pair();
                            hi_mat(i, c) = CD(x * kInvSqrt2, y * kInvSqrt2);
                        }
                    try {
                        double z = 0.0;
                        switch (s) {
                            case Scheme::Mrc:
                                z = FirstHop::mrc(h1, hi_mat, p);
                                break;
                            case Scheme::Zf:
                                z = p.rho1 *
                                    FirstHop::zf_y3(h1, hi_mat, qr, scratch);
                                break;
                            case Scheme::Mmse:
                                z = FirstHop::mmse(h1, hi_mat, p, r, llt,
                                                   scratch);
                                break;
                        }
                        gamma = dual_hop_gamma(z, h2.squaredNorm(), p.rho2);
                        done = true;
                    } catch (const degenerate_draw_error&) {
                        ++shard.redraws;
                        continue;
                    }
                    break;
                }
                if (!done)
                    throw numerical_error(
                        "estimate_outage: trial " + std::to_string(t) +
                        " still degenerate after " +
                        std::to_string(kMaxRedraws) + " redraws");
                if (gamma < p.gamma_th) ++shard.count;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (w == 1) {
        run_range(0, trials, shards[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(w));
        const long chunk = trials / w;
        const long rem = trials % w;
        long lo = 0;
        for (int i = 0; i < w; ++i) {
            const long hi = lo + chunk + (i < rem ? 1 : 0);
            pool.emplace_back(run_range, lo, hi,
                              std::ref(shards[static_cast<std::size_t>(i)]));
            lo = hi;
        }
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    EstimateResult res;
    res.trials = trials;
    for (const auto& sh : shards) {
        res.outage_count += sh.count;
        res.degenerate_redraws += sh.redraws;
    }
    res.probability =
        static_cast<double>(res.outage_count) / static_cast<double>(trials);
    res.std_err = std::sqrt(res.probability * (1.0 - res.probability) /
                            static_cast<double>(trials));
    res.reliable = res.outage_count >= 10;
    return res;
}

}  // namespace relaylink::montecarlo
